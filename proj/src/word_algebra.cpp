#include "dnls/word_algebra.hpp"

#include <map>
#include <sstream>

namespace dnls::words {

bool is_admissible(std::string_view letters) {
    long depth = 0;
    for (char c : letters) {
        if (c == kX)
            ++depth;
        else if (c == kY)
            --depth;
        else
            return false;
        if (depth < 0) return false;
    }
    return depth == 0;
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
    if (!is_admissible(letters_))
        throw AdmissibilityError("inadmissible word: " + letters_);
}

Pairing pair_letters(const Word& word) {
    const std::string& w = word.letters();
    Pairing p;
    p.matches.resize(w.size());
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == kX) {
            stack.push_back(i);
        } else {
            std::size_t x = stack.back();
            stack.pop_back();
            p.matches[x] = i;
            p.matches[i] = x;
        }
    }
    return p;
}

bool is_connected(const Word& word) {
    if (word.size() == 0) return false;
    return pair_letters(word).matches[0] == word.size() - 1;
}

void WordSeries::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational WordSeries::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

WordSeries WordSeries::slice(std::size_t degree) const {
    WordSeries out;
    for (const auto& [w, c] : terms_)
        if (w.degree() == degree) out.add(w, c);
    return out;
}

bool WordSeries::homogeneous() const {
    if (terms_.empty()) return true;
    std::size_t d = terms_.begin()->first.degree();
    for (const auto& [w, c] : terms_)
        if (w.degree() != d) return false;
    return true;
}

WordSeries& WordSeries::operator+=(const WordSeries& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, c);
    return *this;
}

WordSeries& WordSeries::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

namespace {

using IntCount = boost::multiprecision::cpp_int;

// Interleavings of two suffixes, memoized on the remaining lengths.  The
// table is indexed by (chars left of a, chars left of b) and maps each word
// suffix to its multiplicity.
void shuffle_suffix(const std::string& a, std::size_t ia, const std::string& b,
                    std::size_t ib, std::map<std::pair<std::size_t, std::size_t>,
                                             std::map<std::string, IntCount>>& memo) {
    auto key = std::make_pair(ia, ib);
    if (memo.count(key)) return;
    std::map<std::string, IntCount> out;
    if (ia == a.size() && ib == b.size()) {
        out[""] = 1;
    } else {
        if (ia < a.size()) {
            shuffle_suffix(a, ia + 1, b, ib, memo);
            for (const auto& [w, c] : memo.at({ia + 1, ib})) out[a[ia] + w] += c;
        }
        if (ib < b.size()) {
            shuffle_suffix(a, ia, b, ib + 1, memo);
            for (const auto& [w, c] : memo.at({ia, ib + 1})) out[b[ib] + w] += c;
        }
    }
    memo.emplace(key, std::move(out));
}

}  // namespace

WordSeries shuffle(const Word& a, const Word& b) {
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::string, IntCount>> memo;
    shuffle_suffix(a.letters(), 0, b.letters(), 0, memo);
    WordSeries out;
    for (const auto& [w, c] : memo.at({0, 0}))
        out.add(Word(w), Rational(c));  // interleavings of Dyck words are Dyck
    return out;
}

WordSeries shuffle(const WordSeries& a, const WordSeries& b) {
    WordSeries out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            WordSeries prod = shuffle(wa, wb);
            prod *= ca * cb;
            out += prod;
        }
    return out;
}

std::vector<std::pair<std::string, std::string>> coproduct(const Word& word) {
    const std::string& w = word.letters();
    std::vector<std::pair<std::string, std::string>> splits;
    splits.reserve(w.size() + 1);
    for (std::size_t cut = 0; cut <= w.size(); ++cut)
        splits.emplace_back(w.substr(0, cut), w.substr(cut));
    return splits;
}

Word xy_power(std::size_t j) {
    std::string s;
    s.reserve(2 * j);
    for (std::size_t k = 0; k < j; ++k) s += "XY";
    return Word(s);
}

WordSeries s11_series(std::size_t max_degree) {
    WordSeries s;
    for (std::size_t j = 0; j <= max_degree; ++j) s.add(xy_power(j), 1);
    return s;
}

std::vector<WordSeries> log_series(std::size_t max_degree) {
    // ln(1 + sum_j z^j (XY)^(j)) by the derivative recursion
    //   L_j = S_j - (1/j) sum_{m<j} m L_m ⧢ S_{j-m},
    // then flip alternating signs so the returned coefficients are the
    // positive combinations with b_{2j} = -lambda^{2j} * (returned).
    std::vector<WordSeries> L(max_degree);
    for (std::size_t j = 1; j <= max_degree; ++j) {
        WordSeries acc(xy_power(j), 1);
        for (std::size_t m = 1; m < j; ++m) {
            WordSeries cross = shuffle(L[m - 1], WordSeries(xy_power(j - m), 1));
            cross *= -Rational(static_cast<long>(m), static_cast<long>(j));
            acc += cross;
        }
        L[j - 1] = std::move(acc);
    }
    for (std::size_t j = 1; j <= max_degree; ++j)
        if (j % 2 == 0) L[j - 1] *= Rational(-1);
    return L;
}

namespace {

// Tensor over admissible pairs; splits with an inadmissible factor project
// to zero, mirroring the paper's computation of Delta on (XY)^(j).
using Tensor = std::map<std::pair<Word, Word>, Rational>;

void tensor_add(Tensor& t, const Word& a, const Word& b, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

Tensor coproduct_projected(const WordSeries& s) {
    Tensor t;
    for (const auto& [w, c] : s.terms())
        for (const auto& [left, right] : coproduct(w)) {
            if (!is_admissible(left) || !is_admissible(right)) continue;
            tensor_add(t, Word(left), Word(right), c);
        }
    return t;
}

}  // namespace

bool is_group_like(const WordSeries& series, std::size_t max_degree) {
    for (std::size_t j = 0; j <= max_degree; ++j) {
        for (std::size_t k = 0; k <= max_degree; ++k) {
            Tensor lhs;
            {
                Tensor full = coproduct_projected(series.slice(j + k));
                for (const auto& [pair, c] : full)
                    if (pair.first.degree() == j && pair.second.degree() == k)
                        tensor_add(lhs, pair.first, pair.second, c);
            }
            Tensor rhs;
            for (const auto& [wa, ca] : series.slice(j).terms())
                for (const auto& [wb, cb] : series.slice(k).terms())
                    tensor_add(rhs, wa, wb, ca * cb);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool is_primitive(const WordSeries& series) {
    if (series.empty()) return false;
    if (!series.homogeneous()) return false;
    Tensor lhs = coproduct_projected(series);
    Tensor rhs;
    for (const auto& [w, c] : series.terms()) {
        tensor_add(rhs, Word::empty(), w, c);
        tensor_add(rhs, w, Word::empty(), c);
    }
    return lhs == rhs;
}

std::string serialize(const WordSeries& series) {
    std::ostringstream os;
    for (const auto& [w, c] : series.terms()) {
        os << boost::multiprecision::numerator(c) << '/'
           << boost::multiprecision::denominator(c) << ' '
           << (w.size() == 0 ? std::string("1") : w.letters()) << '\n';
    }
    return os.str();
}

}  // namespace dnls::words
