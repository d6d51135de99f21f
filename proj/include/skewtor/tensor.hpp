#pragma once

#include "skewtor/metric.hpp"
#include "skewtor/scalar.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace skewtor {

enum class SlotKind { Contra, Cov };

// Dense valenced tensor over a fixed n-dimensional frame.  Each slot carries
// its own kind so that raising/lowering can toggle a slot in place (the
// round trip is then the identity slot by slot).  Constructed tensors follow
// the contravariant-first layout; frame indices are 1-based in the API to
// match the basis notation X_1..X_n.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int n, std::vector<SlotKind> kinds);
  // Convenience: p contravariant slots followed by q covariant slots.
  static Tensor make(int n, int p, int q);

  int dim() const { return n_; }
  int rank() const { return static_cast<int>(kinds_.size()); }
  const std::vector<SlotKind>& kinds() const { return kinds_; }
  // (p, q) = (number of contravariant slots, number of covariant slots)
  std::pair<int, int> valence() const;

  // Component access; indices are 1-based and given in slot order.
  Scalar& at(const std::vector<int>& idx);
  const Scalar& at(const std::vector<int>& idx) const;
  Scalar& at(std::initializer_list<int> idx);
  const Scalar& at(std::initializer_list<int> idx) const;

  const std::vector<Scalar>& components() const { return comp_; }
  std::vector<Scalar>& components() { return comp_; }

  bool is_zero() const;
  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  Tensor& operator*=(const Scalar& s);
  Tensor& operator*=(const Rational& c);
  friend Tensor operator*(Tensor t, const Scalar& s) { return t *= s; }
  friend Tensor operator*(const Scalar& s, Tensor t) { return t *= s; }
  friend Tensor operator*(Tensor t, const Rational& c) { return t *= c; }
  friend Tensor operator*(const Rational& c, Tensor t) { return t *= c; }

  // Substitutes parameter values into every component (partial substitution).
  Tensor substitute(const std::map<int, Rational>& point) const;

  // Renames parameter ids in every component.
  Tensor rename_params(const std::map<int, int>& id_map) const;

  // Iterates all index tuples (1-based); f receives the tuple.
  template <typename F>
  void for_each_index(F&& f) const {
    std::vector<int> idx(kinds_.size(), 1);
    if (comp_.empty()) return;
    for (;;) {
      f(const_cast<const std::vector<int>&>(idx));
      int s = static_cast<int>(idx.size()) - 1;
      while (s >= 0) {
        if (++idx[static_cast<std::size_t>(s)] <= n_) break;
        idx[static_cast<std::size_t>(s)] = 1;
        --s;
      }
      if (s < 0) break;
    }
  }

 private:
  std::size_t flat(const std::vector<int>& idx) const;
  int n_ = 0;
  std::vector<SlotKind> kinds_;
  std::vector<Scalar> comp_;
};

// Identity endomorphism delta^i_j as a (1,1) tensor.
Tensor identity_tensor(int n);

// Contracts the a-th contravariant slot with the b-th covariant slot
// (1-based within each kind).  Throws on a missing slot.
Tensor contract(const Tensor& t, int contra_pos, int cov_pos);

enum class MusicalDir { Raise, Lower };

// Toggles the kind of the slot at absolute position `slot` (1-based) using the
// metric: lowering contracts a contravariant slot with g, raising contracts a
// covariant slot with g^{-1}.  The slot keeps its position, so
// lower(raise(t, s), s) == t exactly.
Tensor raise_lower(const Tensor& t, int slot, MusicalDir dir, const MetricData& m);

// Full antisymmetrization of a fully covariant tensor, with 1/k! weight.
Tensor alternate(const Tensor& t);

// Writes v into component (i,j,k) of a (0,3) tensor together with all signed
// permutations (the indices must be pairwise distinct).
void assign_skew3(Tensor& t, int i, int j, int k, const Scalar& v);

// True iff t is fully covariant and alternate(t) == t.
bool is_skew(const Tensor& t);

}  // namespace skewtor
