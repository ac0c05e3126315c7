#include "kw/word.hpp"

#include <sstream>
#include <stdexcept>

namespace kw {

Word Word::inverse() const {
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back(it->inverse());
    return w;
}

Word Word::concat(const Word& o) const {
    Word w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

Word Word::power(int m) const {
    if (m == 0) return Word();
    Word base = m > 0 ? *this : inverse();
    Word w;
    for (int i = 0; i < std::abs(m); ++i) w = w.concat(base);
    return w;
}

Word Word::freely_reduced() const {
    std::vector<Letter> out;
    for (const Letter& l : letters) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(std::move(out));
}

Word Word::cyclically_reduced() const {
    Word w = freely_reduced();
    while (w.length() >= 2 && w.letters.front().gen == w.letters.back().gen &&
           w.letters.front().sign == -w.letters.back().sign) {
        w.letters.erase(w.letters.begin());
        w.letters.pop_back();
        w = w.freely_reduced();
    }
    return w;
}

bool Word::is_cyclically_reduced() const { return *this == cyclically_reduced(); }

std::vector<long long> Word::exponent_vector(int n_generators) const {
    std::vector<long long> v(n_generators, 0);
    for (const Letter& l : letters) {
        if (l.gen < 0 || l.gen >= n_generators)
            throw std::invalid_argument("letter references generator outside range");
        v[l.gen] += l.sign;
    }
    return v;
}

std::string Word::str() const {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : letters) {
        if (!first) os << ' ';
        first = false;
        os << 'a' << (l.gen + 1);
        if (l.sign < 0) os << "^-1";
    }
    if (first) os << "1";
    return os.str();
}

Word parse_word(const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        if (tok.empty() || tok[0] != 'a')
            throw std::invalid_argument("bad word token: " + tok);
        size_t caret = tok.find('^');
        int gen = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos
                                                                     : caret - 1));
        int sign = 1;
        if (caret != std::string::npos) {
            int e = std::stoi(tok.substr(caret + 1));
            if (e != 1 && e != -1) throw std::invalid_argument("only exponents +-1 in tokens");
            sign = e;
        }
        if (gen < 1) throw std::invalid_argument("generators are 1-based");
        w.letters.push_back({gen - 1, sign});
    }
    return w;
}

} // namespace kw
