#pragma once

#include <string>
#include <vector>

namespace csrec {

// Freely reduced word in a free group; letters are +-g with generators
// numbered from 1.
using Word = std::vector<int>;

Word reduced(Word w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);

// "abAB" -> {1, 2, -1, -2}; letters a..z are generators 1..26, capitals inverses.
Word word_from_string(const std::string& s);
std::string word_to_string(const Word& w);

struct GroupRingTerm {
    long coeff;
    Word word;
};

// Element of the integral group ring, represented as a merged term list.
using GroupRing = std::vector<GroupRingTerm>;

GroupRing ring_add(GroupRing a, const GroupRing& b);
GroupRing ring_scale(GroupRing a, long k);

// Fox free derivative d(w)/d(x_gen): d(uv) = du + u dv, d(x)/dx = 1,
// d(x^-1)/dx = -x^-1, d(y^{+-1})/dx = 0 for y != x.
GroupRing fox_derivative(const Word& w, int gen);

// Exponent sum of generator `gen` in w (the augmentation of the Fox derivative).
long exponent_sum(const Word& w, int gen);

}  // namespace csrec
