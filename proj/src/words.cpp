#include "csrec/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace csrec {

Word reduced(Word w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        if (letter == 0) throw std::invalid_argument("word letter 0");
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& letter : out) letter = -letter;
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduced(std::move(out));
}

Word word_from_string(const std::string& s) {
    Word w;
    for (char ch : s) {
        if (ch >= 'a' && ch <= 'z')
            w.push_back(ch - 'a' + 1);
        else if (ch >= 'A' && ch <= 'Z')
            w.push_back(-(ch - 'A' + 1));
        else
            throw std::invalid_argument("bad word character");
    }
    return reduced(std::move(w));
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (int letter : w)
        s += static_cast<char>(letter > 0 ? 'a' + letter - 1 : 'A' - letter - 1);
    return s;
}

GroupRing ring_add(GroupRing a, const GroupRing& b) {
    for (const auto& t : b) {
        auto it = std::find_if(a.begin(), a.end(),
                               [&](const GroupRingTerm& u) { return u.word == t.word; });
        if (it == a.end())
            a.push_back(t);
        else {
            it->coeff += t.coeff;
            if (it->coeff == 0) a.erase(it);
        }
    }
    return a;
}

GroupRing ring_scale(GroupRing a, long k) {
    if (k == 0) return {};
    for (auto& t : a) t.coeff *= k;
    return a;
}

GroupRing fox_derivative(const Word& w, int gen) {
    GroupRing out;
    Word prefix;
    for (int letter : w) {
        if (letter == gen) {
            out = ring_add(std::move(out), {{1, prefix}});
        } else if (letter == -gen) {
            out = ring_add(std::move(out), {{-1, concat(prefix, {letter})}});
        }
        prefix = concat(prefix, {letter});
    }
    return out;
}

long exponent_sum(const Word& w, int gen) {
    long s = 0;
    for (int letter : w) {
        if (letter == gen) ++s;
        if (letter == -gen) --s;
    }
    return s;
}

}  // namespace csrec
