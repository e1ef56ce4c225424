// SPDX-License-Identifier: MIT
//
// The graded ring R on segment generators: m*, M*, M*_GL, contragredient,
// and cuspidal (minimal Jacquet) expansion as exponent strings.

#pragma once

#include <utility>
#include <vector>

#include "apk/core.hpp"

namespace apk {

struct WordTooLarge : Error { using Error::Error; };

using WordSum = FormalSum<GLWord>;
using RTensorR = FormalSum<std::pair<GLWord, GLWord>>;
using RTensor3 = FormalSum<std::pair<GLWord, std::pair<GLWord, GLWord>>>;

inline constexpr std::int64_t kDefaultLetterBound = 14;

// m* on a generator (prefix/suffix splitting) and on words (multiplicative)
RTensorR mstar(const GLGen& g);
RTensorR mstar(const GLWord& w);

// M* := (m (x) id) o (~ (x) m*) o kappa o m*, evaluated literally
RTensorR Mstar(const GLWord& w);
// closed forms for a single generator, used to cross-check Mstar
RTensorR Mstar_closed_form(const GLGen& g);

// the R (x) 1 component of M*
WordSum Mstar_GL(const GLGen& g);
WordSum Mstar_GL(const GLWord& w);

// products
RTensorR tensor_mul(const RTensorR& a, const RTensorR& b);
WordSum word_mul(const WordSum& a, const WordSum& b);
// (m* (x) id) o m* and (id (x) m*) o m*
RTensor3 coassoc_left(const GLWord& w);
RTensor3 coassoc_right(const GLWord& w);

// single generator string: Delta[x,y] -> (y,...,x), Zeta[x,y] -> (x,...,y)
ExpString gen_string(const GLGen& g);

// all interleavings with multiplicity
StringSum shuffle(const ExpString& a, const ExpString& b);
StringSum shuffle(const StringSum& a, const StringSum& b);

// minimal Jacquet module of a GL word
StringSum cuspidal_expand(const GLWord& w, std::int64_t letter_bound = kDefaultLetterBound);
StringSum cuspidal_expand(const WordSum& s, std::int64_t letter_bound = kDefaultLetterBound);

Coeff string_mult(const StringSum& s, const ExpString& t);

// exponent multiset of a word (its cuspidal support on each line)
std::vector<Letter> support(const GLWord& w);
std::vector<Letter> support(const ExpString& s);

// number of ways of interleaving `parts` (each read in order) into `target`
Coeff count_interleavings(const std::vector<ExpString>& parts, const ExpString& target);

// r_min(w |x tail) = M*_GL(w) shuffled with the tail strings
StringSum rmin_induced(const GLWord& w, const StringSum& tail,
                       std::int64_t letter_bound = kDefaultLetterBound);
// coefficient of `target` in rmin_induced(w, tail), without expanding
Coeff rmin_induced_mult(const GLWord& w, const StringSum& tail, const ExpString& target);

}  // namespace apk
