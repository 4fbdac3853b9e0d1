#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnls/errors.hpp"

// Ordered-word calculus for the iterated integrals of the transmission
// coefficient: admissible X/Y words, parenthesis pairing, shuffle product,
// deconcatenation coproduct, and the graded logarithm of the s11 word series.
// All coefficients are exact rationals so the combinatorial identities hold
// exactly; no floating point enters this module.
namespace dnls::words {

using Rational = boost::multiprecision::cpp_rational;

// Letters are stored as the characters 'X' and 'Y'.
inline constexpr char kX = 'X';
inline constexpr char kY = 'Y';

// Dyck condition: every prefix has at least as many X as Y and the totals
// are equal.  Total function on raw letter strings.
bool is_admissible(std::string_view letters);

// An admissible word.  Construction validates; the empty word is the unit.
class Word {
  public:
    Word() = default;  // empty word
    explicit Word(std::string letters);

    static Word empty() { return Word{}; }

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    // Half the letter count; the grading of the algebra.
    std::size_t degree() const { return letters_.size() / 2; }

    auto operator<=>(const Word&) const = default;

  private:
    std::string letters_;
};

// X position i (0-based) matched to Y position matches[i]; entries at Y
// positions are the reverse pointers.  Produced by parenthesis matching.
struct Pairing {
    std::vector<std::size_t> matches;
};

Pairing pair_letters(const Word& word);

// True iff the first X is matched with the final Y.
bool is_connected(const Word& word);

// Finite linear combination of admissible words with exact rational
// coefficients.  Zero coefficients are never stored; terms are kept in
// lexicographic word order (map ordering), which also fixes serialization.
class WordSeries {
  public:
    WordSeries() = default;
    explicit WordSeries(const Word& w, const Rational& c = 1) { add(w, c); }

    void add(const Word& w, const Rational& c);
    Rational coefficient(const Word& w) const;

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Terms of the given degree (half word length).
    WordSeries slice(std::size_t degree) const;
    // True iff all terms share one degree (vacuously true when empty).
    bool homogeneous() const;

    WordSeries& operator+=(const WordSeries& rhs);
    WordSeries& operator*=(const Rational& c);
    friend WordSeries operator+(WordSeries a, const WordSeries& b) { return a += b; }
    friend WordSeries operator*(const Rational& c, WordSeries s) { return s *= c; }

    bool operator==(const WordSeries&) const = default;

  private:
    std::map<Word, Rational> terms_;
};

// Shuffle product: sum over all order-preserving interleavings.  Commutative;
// coefficients of the word-level product are nonnegative integers summing to
// binomial(|a|+|b|, |a|).
WordSeries shuffle(const Word& a, const Word& b);
WordSeries shuffle(const WordSeries& a, const WordSeries& b);

// All deconcatenation splits of the word, empty factors included.  Factors
// are raw letter strings and need not be admissible: the coproduct of the
// Hopf algebra is this list with inadmissible factors projected away.
std::vector<std::pair<std::string, std::string>> coproduct(const Word& word);

// The strictly ordered word (XY)^(j).
Word xy_power(std::size_t j);

// The s11 word series 1 + sum_{j<=max_degree} (XY)^(j) (unit coefficients;
// the caller applies the (-1)^j lambda^{2j} prefactors).
WordSeries s11_series(std::size_t max_degree);

// Graded word coefficients of ln s11: entry j-1 holds the degree-j series,
// normalized so the coefficients come out positive; the numerical value of
// b_{2j} is -lambda^{2j} times the returned combination.  Degrees 1..3 are
// 1*XY, 2*XXYY, 4*XXYXYY + 12*XXXYYY.
std::vector<WordSeries> log_series(std::size_t max_degree);

// Tensor-level predicates.  Both interpret the coproduct in the span of
// admissible words: splits with an inadmissible factor vanish.
//
// Group-likeness of a series S (slices read off by degree, absent slices are
// zero): Delta(S) = S (x) S in every bidegree (j,k) with j,k <= max_degree.
// Supply S up to degree 2*max_degree for a full check.
bool is_group_like(const WordSeries& series, std::size_t max_degree);

// Primitivity of a homogeneous series p: Delta(p) = 1 (x) p + p (x) 1.
bool is_primitive(const WordSeries& series);

// Deterministic text form: one term per line, "<num>/<den> <word>", words in
// lexicographic order.  The empty word prints as "1".
std::string serialize(const WordSeries& series);

}  // namespace dnls::words
