#pragma once

// One-row crystals B_l of type A^{(1)}_n, their tensor products, the energy
// function and the combinatorial R (classical and affinized).
//
// An element of B_l is stored as its letter-multiplicity vector
// (x_1, ..., x_{n+1}) with x_1 + ... + x_{n+1} = l.  Elements may carry an
// alphabet restriction a, meaning they live in B^{>=a+1}_l (no letter <= a);
// that crystal is the A^{(1)}_{n-a} crystal realized on letters a+1..n+1.
//
// Tensor products follow the convention where e_i acts on the left factor
// when phi_i(b) >= epsilon_i(b').  Highest paths therefore start with 1^l on
// the left and read as lattice words from left to right.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kkr/error.hpp"

namespace kkr {

using Letter = int;

class CrystalElement {
 public:
  CrystalElement(int rank, std::vector<int> mult, int restriction = 0)
      : rank_(rank), restriction_(restriction), mult_(std::move(mult)) {
    if (rank_ < 0) throw precondition_error("rank must be nonnegative");
    if (mult_.size() != static_cast<std::size_t>(rank_) + 1)
      throw shape_mismatch("multiplicity vector must have rank+1 entries");
    if (restriction_ < 0 || restriction_ > rank_)
      throw precondition_error("restriction must lie in 0..rank");
    for (std::size_t i = 0; i < mult_.size(); ++i) {
      if (mult_[i] < 0) throw precondition_error("negative multiplicity");
      if (static_cast<int>(i) < restriction_ && mult_[i] != 0)
        throw precondition_error("letter " + std::to_string(i + 1) +
                                 " is excluded by the alphabet restriction");
    }
    length_ = std::accumulate(mult_.begin(), mult_.end(), 0);
    if (length_ < 1) throw shape_mismatch("crystal elements have length >= 1");
  }

  /// The tableau letter^length.
  static CrystalElement row(int rank, Letter letter, int length,
                            int restriction = 0) {
    if (letter < 1 || letter > rank + 1)
      throw precondition_error("letter out of alphabet");
    std::vector<int> m(static_cast<std::size_t>(rank) + 1, 0);
    m[static_cast<std::size_t>(letter - 1)] = length;
    return CrystalElement(rank, std::move(m), restriction);
  }

  static CrystalElement from_letters(int rank, std::span<const Letter> letters,
                                     int restriction = 0) {
    std::vector<int> m(static_cast<std::size_t>(rank) + 1, 0);
    for (Letter c : letters) {
      if (c < 1 || c > rank + 1)
        throw precondition_error("letter " + std::to_string(c) +
                                 " out of alphabet 1.." +
                                 std::to_string(rank + 1));
      ++m[static_cast<std::size_t>(c - 1)];
    }
    return CrystalElement(rank, std::move(m), restriction);
  }

  int rank() const noexcept { return rank_; }
  int length() const noexcept { return length_; }
  int restriction() const noexcept { return restriction_; }
  const std::vector<int>& mult() const noexcept { return mult_; }

  int count(Letter c) const {
    if (c < 1 || c > rank_ + 1) return 0;
    return mult_[static_cast<std::size_t>(c - 1)];
  }

  /// Letters of the row tableau in weakly increasing order.
  std::vector<Letter> letters() const {
    std::vector<Letter> w;
    w.reserve(static_cast<std::size_t>(length_));
    for (std::size_t i = 0; i < mult_.size(); ++i)
      w.insert(w.end(), static_cast<std::size_t>(mult_[i]),
               static_cast<Letter>(i + 1));
    return w;
  }

  /// Same tableau regarded in a crystal with a different alphabet restriction.
  CrystalElement with_restriction(int restriction) const {
    return CrystalElement(rank_, mult_, restriction);
  }

  auto operator<=>(const CrystalElement&) const = default;
  bool operator==(const CrystalElement&) const = default;

 private:
  int rank_;
  int restriction_;
  std::vector<int> mult_;
  int length_ = 0;
};

/// b[d]: an element of the affinization Aff(B_l).
struct AffineElement {
  CrystalElement element;
  int mode = 0;

  auto operator<=>(const AffineElement&) const = default;
  bool operator==(const AffineElement&) const = default;
};

namespace detail {
inline const CrystalElement& element_of(const CrystalElement& e) { return e; }
inline const CrystalElement& element_of(const AffineElement& e) {
  return e.element;
}
}  // namespace detail

/// Ordered tensor product of factors sharing one rank and one alphabet
/// restriction.  The rank is kept even for the empty word.
template <class Factor>
class BasicTensorWord {
 public:
  using value_type = Factor;
  using const_iterator = typename std::vector<Factor>::const_iterator;

  explicit BasicTensorWord(int rank, int restriction = 0,
                           std::vector<Factor> factors = {})
      : rank_(rank), restriction_(restriction), factors_(std::move(factors)) {
    if (restriction_ < 0 || restriction_ > rank_)
      throw precondition_error("restriction must lie in 0..rank");
    for (const auto& f : factors_) check(f);
  }

  int rank() const noexcept { return rank_; }
  int restriction() const noexcept { return restriction_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  const Factor& operator[](std::size_t i) const { return factors_[i]; }
  const Factor& front() const { return factors_.front(); }
  const Factor& back() const { return factors_.back(); }
  const_iterator begin() const noexcept { return factors_.begin(); }
  const_iterator end() const noexcept { return factors_.end(); }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  void push_back(Factor f) {
    check(f);
    factors_.push_back(std::move(f));
  }

  /// Tableau lengths of the factors, in order.
  std::vector<int> lengths() const {
    std::vector<int> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(detail::element_of(f).length());
    return out;
  }

  auto operator<=>(const BasicTensorWord&) const = default;
  bool operator==(const BasicTensorWord&) const = default;

 private:
  void check(const Factor& f) const {
    const CrystalElement& e = detail::element_of(f);
    if (e.rank() != rank_ || e.restriction() != restriction_)
      throw rank_mismatch("tensor factor does not match the word's crystal");
  }

  int rank_;
  int restriction_;
  std::vector<Factor> factors_;
};

using TensorWord = BasicTensorWord<CrystalElement>;
using AffineTensorWord = BasicTensorWord<AffineElement>;

/// Every element of B_l on letters restriction+1..rank+1, in lexicographic
/// order of their letter words.
inline std::vector<CrystalElement> all_elements(int rank, int length,
                                                int restriction = 0) {
  std::vector<CrystalElement> out;
  std::vector<Letter> word;
  auto rec = [&](auto& self, Letter from) -> void {
    if (static_cast<int>(word.size()) == length) {
      out.push_back(CrystalElement::from_letters(rank, word, restriction));
      return;
    }
    for (Letter c = from; c <= rank + 1; ++c) {
      word.push_back(c);
      self(self, c);
      word.pop_back();
    }
  };
  rec(rec, restriction + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Weights and Kashiwara operators

inline std::vector<int> weight(const CrystalElement& x) { return x.mult(); }

template <class Factor>
std::vector<int> weight(const BasicTensorWord<Factor>& w) {
  std::vector<int> wt(static_cast<std::size_t>(w.rank()) + 1, 0);
  for (const auto& f : w) {
    const auto& m = detail::element_of(f).mult();
    for (std::size_t i = 0; i < m.size(); ++i) wt[i] += m[i];
  }
  return wt;
}

namespace detail {
inline void check_index(int rank, int restriction, int i) {
  if (i <= restriction || i > rank)
    throw index_out_of_range("Kashiwara index " + std::to_string(i) +
                             " outside " + std::to_string(restriction + 1) +
                             ".." + std::to_string(rank));
}
}  // namespace detail

/// epsilon_i(x): how many times e_i can be applied (= x_{i+1}).
inline int epsilon(const CrystalElement& x, int i) {
  detail::check_index(x.rank(), x.restriction(), i);
  return x.count(i + 1);
}

/// phi_i(x): how many times f_i can be applied (= x_i).
inline int phi(const CrystalElement& x, int i) {
  detail::check_index(x.rank(), x.restriction(), i);
  return x.count(i);
}

/// e_i: x_i -> x_i + 1, x_{i+1} -> x_{i+1} - 1; nullopt when x_{i+1} = 0.
inline std::optional<CrystalElement> kashiwara_e(const CrystalElement& x,
                                                 int i) {
  if (epsilon(x, i) == 0) return std::nullopt;
  auto m = x.mult();
  ++m[static_cast<std::size_t>(i - 1)];
  --m[static_cast<std::size_t>(i)];
  return CrystalElement(x.rank(), std::move(m), x.restriction());
}

/// f_i: x_i -> x_i - 1, x_{i+1} -> x_{i+1} + 1; nullopt when x_i = 0.
inline std::optional<CrystalElement> kashiwara_f(const CrystalElement& x,
                                                 int i) {
  if (phi(x, i) == 0) return std::nullopt;
  auto m = x.mult();
  --m[static_cast<std::size_t>(i - 1)];
  ++m[static_cast<std::size_t>(i)];
  return CrystalElement(x.rank(), std::move(m), x.restriction());
}

namespace detail {

struct PrefixStrings {
  std::vector<int> eps;  // epsilon_i of b_1 (x) ... (x) b_k
  std::vector<int> phi;  // phi_i of the same prefix
};

// Fold the tensor product rule over every prefix of the word.
inline PrefixStrings prefix_strings(const TensorWord& w, int i) {
  PrefixStrings s;
  int e = 0;
  int p = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int eb = epsilon(w[k], i);
    const int pb = phi(w[k], i);
    if (k == 0) {
      e = eb;
      p = pb;
    } else {
      const int ne = e + std::max(0, eb - p);
      const int np = pb + std::max(0, p - eb);
      e = ne;
      p = np;
    }
    s.eps.push_back(e);
    s.phi.push_back(p);
  }
  return s;
}

template <bool Raise>
std::optional<TensorWord> tensor_act(const TensorWord& w, int i) {
  detail::check_index(w.rank(), w.restriction(), i);
  if (w.empty()) return std::nullopt;
  const auto s = prefix_strings(w, i);
  // Peel factors off the right end: (b_1 ... b_{k-1}) (x) b_k.
  std::size_t k = w.size() - 1;
  while (k > 0) {
    const int left_phi = s.phi[k - 1];
    const int right_eps = epsilon(w[k], i);
    const bool acts_left = Raise ? left_phi >= right_eps : left_phi > right_eps;
    if (!acts_left) break;
    --k;
  }
  auto moved = Raise ? kashiwara_e(w[k], i) : kashiwara_f(w[k], i);
  if (!moved) return std::nullopt;
  auto factors = w.factors();
  factors[k] = std::move(*moved);
  return TensorWord(w.rank(), w.restriction(), std::move(factors));
}

}  // namespace detail

/// e_i on a tensor word by the tensor product rule; nullopt if it kills it.
inline std::optional<TensorWord> tensor_e(const TensorWord& w, int i) {
  return detail::tensor_act<true>(w, i);
}

/// f_i on a tensor word by the tensor product rule; nullopt if it kills it.
inline std::optional<TensorWord> tensor_f(const TensorWord& w, int i) {
  return detail::tensor_act<false>(w, i);
}

/// True iff every classical e_i above the word's restriction annihilates it.
inline bool is_highest(const TensorWord& w) {
  if (w.empty()) return true;
  for (int i = w.restriction() + 1; i <= w.rank(); ++i)
    if (detail::prefix_strings(w, i).eps.back() != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Combinatorial R and energy

/// Image of x (x) y under R together with the energy H(x (x) y).
struct RImage {
  CrystalElement left;   // y~, same length as y
  CrystalElement right;  // x~, same length as x
  int energy = 0;
};

namespace detail {

inline void check_compatible(const CrystalElement& x, const CrystalElement& y) {
  if (x.rank() != y.rank())
    throw rank_mismatch("rank " + std::to_string(x.rank()) + " vs " +
                        std::to_string(y.rank()));
  if (x.restriction() != y.restriction())
    throw rank_mismatch("alphabet restriction " +
                        std::to_string(x.restriction()) + " vs " +
                        std::to_string(y.restriction()));
}

// q[i] = Q_i(x, y) for i = 0..n, letters indexed cyclically in Z_{n+1}.
inline std::vector<int> q_values(const std::vector<int>& x,
                                 const std::vector<int>& y) {
  const std::size_t size = x.size();
  std::vector<int> q(size);
  for (std::size_t i = 0; i < size; ++i) {
    // Position j (1-based) after i holds letter i + j.
    auto at = [&](std::size_t j) { return (i + j - 1) % size; };
    int xs = 0;
    int ys = 0;
    for (std::size_t j = 2; j <= size; ++j) ys += y[at(j)];
    int best = xs + ys;
    for (std::size_t k = 2; k <= size; ++k) {
      xs += x[at(k - 1)];
      ys -= y[at(k)];
      best = std::min(best, xs + ys);
    }
    q[i] = best;
  }
  return q;
}

}  // namespace detail

/// R: x (x) y -> y~ (x) x~ with the piecewise-linear Q_i formulas.
inline RImage r_matrix(const CrystalElement& x, const CrystalElement& y) {
  detail::check_compatible(x, y);
  const auto& xm = x.mult();
  const auto& ym = y.mult();
  const auto q = detail::q_values(xm, ym);
  const std::size_t size = xm.size();
  std::vector<int> xt(size);
  std::vector<int> yt(size);
  for (std::size_t t = 0; t < size; ++t) {
    const int delta = q[(t + 1) % size] - q[t];
    xt[t] = xm[t] + delta;
    yt[t] = ym[t] - delta;
  }
  return RImage{CrystalElement(x.rank(), std::move(yt), x.restriction()),
                CrystalElement(x.rank(), std::move(xt), x.restriction()),
                std::min(x.length(), y.length()) - q[0]};
}

/// H(x (x) y) = min(l, m) - Q_0(x, y); lies in [0, min(l, m)].
inline int energy(const CrystalElement& x, const CrystalElement& y) {
  detail::check_compatible(x, y);
  return std::min(x.length(), y.length()) -
         detail::q_values(x.mult(), y.mult())[0];
}

inline std::pair<CrystalElement, CrystalElement> combinatorial_r(
    const CrystalElement& x, const CrystalElement& y) {
  auto r = r_matrix(x, y);
  return {std::move(r.left), std::move(r.right)};
}

/// x[d] (x) y[e] -> y~[e - H] (x) x~[d + H].
inline std::pair<AffineElement, AffineElement> affine_r(const AffineElement& a,
                                                        const AffineElement& b) {
  auto r = r_matrix(a.element, b.element);
  return {AffineElement{std::move(r.left), b.mode - r.energy},
          AffineElement{std::move(r.right), a.mode + r.energy}};
}

/// Brings b through prefix to the front: prefix (x) b ~ b' (x) prefix'.
/// Returns b' and prefix'.
inline std::pair<CrystalElement, TensorWord> carry_left(const TensorWord& prefix,
                                                        const CrystalElement& b) {
  if (b.rank() != prefix.rank() || b.restriction() != prefix.restriction())
    throw rank_mismatch("carried element does not match the prefix crystal");
  auto factors = prefix.factors();
  CrystalElement cur = b;
  for (std::size_t j = factors.size(); j-- > 0;) {
    auto r = r_matrix(factors[j], cur);
    factors[j] = std::move(r.right);
    cur = std::move(r.left);
  }
  return {std::move(cur),
          TensorWord(prefix.rank(), prefix.restriction(), std::move(factors))};
}

/// Result of pushing a carrier through a word: carrier (x) p ~ output (x) carrier'.
struct CarrierPass {
  TensorWord output;
  CrystalElement carrier;
};

inline CarrierPass carrier_pass(const CrystalElement& carrier,
                                const TensorWord& p) {
  if (carrier.rank() != p.rank() || carrier.restriction() != p.restriction())
    throw rank_mismatch("carrier does not match the word's crystal");
  TensorWord out(p.rank(), p.restriction());
  CrystalElement u = carrier;
  for (const auto& b : p) {
    auto r = r_matrix(u, b);
    out.push_back(std::move(r.left));
    u = std::move(r.right);
  }
  return {std::move(out), std::move(u)};
}

// ---------------------------------------------------------------------------
// Small conversions

inline TensorWord strip_modes(const AffineTensorWord& w) {
  TensorWord out(w.rank(), w.restriction());
  for (const auto& f : w) out.push_back(f.element);
  return out;
}

inline std::vector<int> modes_of(const AffineTensorWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& f : w) out.push_back(f.mode);
  return out;
}

inline AffineTensorWord with_modes(const TensorWord& w,
                                   std::span<const int> modes) {
  if (modes.size() != w.size())
    throw shape_mismatch("one mode per tensor factor is required");
  AffineTensorWord out(w.rank(), w.restriction());
  for (std::size_t i = 0; i < w.size(); ++i)
    out.push_back(AffineElement{w[i], modes[i]});
  return out;
}

/// Regards every factor as an element of a crystal with another restriction
/// (the set-theoretic embedding B^{>=a+1} into B^{>=a}, or its inverse).
template <class Factor>
BasicTensorWord<Factor> with_restriction(const BasicTensorWord<Factor>& w,
                                         int restriction) {
  BasicTensorWord<Factor> out(w.rank(), restriction);
  for (const auto& f : w) {
    if constexpr (std::is_same_v<Factor, AffineElement>)
      out.push_back(AffineElement{f.element.with_restriction(restriction), f.mode});
    else
      out.push_back(f.with_restriction(restriction));
  }
  return out;
}

/// Shifts every letter by offset, moving the word into a crystal of the
/// given rank; the restriction becomes offset.  Used to compare a truncated
/// problem on letters 1..k with its image on letters offset+1..offset+k.
inline TensorWord relabeled(const TensorWord& w, int offset, int rank) {
  TensorWord out(rank, offset);
  for (const auto& f : w) {
    std::vector<Letter> letters = f.letters();
    for (auto& c : letters) c += offset;
    out.push_back(CrystalElement::from_letters(rank, letters, offset));
  }
  return out;
}

}  // namespace kkr
