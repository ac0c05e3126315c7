#ifndef KW_IO_HPP
#define KW_IO_HPP

#include <iosfwd>
#include <string>

#include "kw/complex.hpp"

namespace kw {

// Interchange format:
//   {"vertices": N, "edges": [[a,b],...], "triangles": [[a,b,c],...]}
// with 0-based ids and lexicographically sorted simplex lists.  The loader
// verifies downward closure and rejects duplicates or out-of-range ids.
std::string complex_to_json(const Complex2& K, bool pretty = false);
Complex2 complex_from_json(const std::string& text);
Complex2 complex_from_stream(std::istream& in);
Complex2 load_complex(const std::string& path_or_dash);

} // namespace kw

#endif
