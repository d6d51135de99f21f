#include "skewtor/tensor.hpp"

#include "skewtor/error.hpp"

#include <algorithm>
#include <numeric>

namespace skewtor {

namespace {

std::size_t pow_size(int n, std::size_t rank) {
  std::size_t s = 1;
  for (std::size_t i = 0; i < rank; ++i) s *= static_cast<std::size_t>(n);
  return s;
}

}  // namespace

Tensor::Tensor(int n, std::vector<SlotKind> kinds)
    : n_(n), kinds_(std::move(kinds)), comp_(pow_size(n, kinds_.size())) {
  if (n <= 0) throw Error("tensor dimension must be positive");
}

Tensor Tensor::make(int n, int p, int q) {
  std::vector<SlotKind> kinds;
  kinds.reserve(static_cast<std::size_t>(p + q));
  for (int i = 0; i < p; ++i) kinds.push_back(SlotKind::Contra);
  for (int i = 0; i < q; ++i) kinds.push_back(SlotKind::Cov);
  return Tensor(n, std::move(kinds));
}

std::pair<int, int> Tensor::valence() const {
  int p = static_cast<int>(std::count(kinds_.begin(), kinds_.end(), SlotKind::Contra));
  return {p, rank() - p};
}

std::size_t Tensor::flat(const std::vector<int>& idx) const {
  if (idx.size() != kinds_.size()) throw Error("tensor index arity mismatch");
  std::size_t f = 0;
  for (std::size_t s = 0; s < idx.size(); ++s) {
    int i = idx[s];
    if (i < 1 || i > n_) throw Error("tensor index out of range");
    f = f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i - 1);
  }
  return f;
}

Scalar& Tensor::at(const std::vector<int>& idx) { return comp_[flat(idx)]; }
const Scalar& Tensor::at(const std::vector<int>& idx) const { return comp_[flat(idx)]; }
Scalar& Tensor::at(std::initializer_list<int> idx) { return comp_[flat(std::vector<int>(idx))]; }
const Scalar& Tensor::at(std::initializer_list<int> idx) const {
  return comp_[flat(std::vector<int>(idx))];
}

bool Tensor::is_zero() const {
  return std::all_of(comp_.begin(), comp_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Tensor::operator==(const Tensor& o) const {
  return n_ == o.n_ && kinds_ == o.kinds_ && comp_ == o.comp_;
}

Tensor Tensor::operator-() const {
  Tensor out = *this;
  for (auto& c : out.comp_) c = -c;
  return out;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (n_ != o.n_ || kinds_ != o.kinds_) throw Error("tensor shape mismatch in addition");
  for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += o.comp_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (n_ != o.n_ || kinds_ != o.kinds_) throw Error("tensor shape mismatch in subtraction");
  for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  for (auto& c : comp_) c *= s;
  return *this;
}

Tensor& Tensor::operator*=(const Rational& c) {
  for (auto& v : comp_) v *= c;
  return *this;
}

Tensor Tensor::substitute(const std::map<int, Rational>& point) const {
  Tensor out = *this;
  for (auto& c : out.comp_) c = c.substitute(point);
  return out;
}

Tensor Tensor::rename_params(const std::map<int, int>& id_map) const {
  Tensor out = *this;
  for (auto& c : out.comp_) c = c.rename_params(id_map);
  return out;
}

Tensor identity_tensor(int n) {
  Tensor t = Tensor::make(n, 1, 1);
  for (int i = 1; i <= n; ++i) t.at({i, i}) = Scalar(1);
  return t;
}

Tensor contract(const Tensor& t, int contra_pos, int cov_pos) {
  const auto& kinds = t.kinds();
  int abs_contra = -1, abs_cov = -1;
  int seen_contra = 0, seen_cov = 0;
  for (std::size_t s = 0; s < kinds.size(); ++s) {
    if (kinds[s] == SlotKind::Contra && ++seen_contra == contra_pos)
      abs_contra = static_cast<int>(s);
    if (kinds[s] == SlotKind::Cov && ++seen_cov == cov_pos) abs_cov = static_cast<int>(s);
  }
  if (abs_contra < 0)
    throw Error("contract: contravariant slot " + std::to_string(contra_pos) + " not present");
  if (abs_cov < 0)
    throw Error("contract: covariant slot " + std::to_string(cov_pos) + " not present");

  std::vector<SlotKind> out_kinds;
  for (std::size_t s = 0; s < kinds.size(); ++s) {
    if (static_cast<int>(s) == abs_contra || static_cast<int>(s) == abs_cov) continue;
    out_kinds.push_back(kinds[s]);
  }
  Tensor out(t.dim(), out_kinds);
  out.for_each_index([&](const std::vector<int>& oidx) {
    Scalar sum;
    for (int k = 1; k <= t.dim(); ++k) {
      std::vector<int> idx(kinds.size());
      std::size_t src = 0;
      for (std::size_t s = 0; s < kinds.size(); ++s) {
        if (static_cast<int>(s) == abs_contra || static_cast<int>(s) == abs_cov)
          idx[s] = k;
        else
          idx[s] = oidx[src++];
      }
      sum += t.at(idx);
    }
    out.at(oidx) = sum;
  });
  return out;
}

Tensor raise_lower(const Tensor& t, int slot, MusicalDir dir, const MetricData& m) {
  if (slot < 1 || slot > t.rank()) throw Error("raise_lower: slot out of range");
  if (t.dim() != m.n) throw Error("raise_lower: metric dimension mismatch");
  std::size_t s = static_cast<std::size_t>(slot - 1);
  SlotKind kind = t.kinds()[s];
  if (dir == MusicalDir::Lower && kind != SlotKind::Contra)
    throw Error("raise_lower: cannot lower a covariant slot");
  if (dir == MusicalDir::Raise && kind != SlotKind::Cov)
    throw Error("raise_lower: cannot raise a contravariant slot");
  const RationalMatrix& mat = dir == MusicalDir::Lower ? m.g : m.ginv;

  std::vector<SlotKind> out_kinds = t.kinds();
  out_kinds[s] = dir == MusicalDir::Lower ? SlotKind::Cov : SlotKind::Contra;
  Tensor out(t.dim(), out_kinds);
  out.for_each_index([&](const std::vector<int>& oidx) {
    Scalar sum;
    std::vector<int> idx = oidx;
    for (int k = 1; k <= t.dim(); ++k) {
      const Rational& w = mat[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(oidx[s] - 1)];
      if (w == 0) continue;
      idx[s] = k;
      Scalar term = t.at(idx);
      term *= w;
      sum += term;
    }
    out.at(oidx) = sum;
  });
  return out;
}

namespace {

// Generates all permutations with their signs by Heap's algorithm.
void permutations_with_sign(int k, std::vector<std::pair<std::vector<int>, int>>& out) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  int sign = 1;
  std::vector<int> c(static_cast<std::size_t>(k), 0);
  out.emplace_back(perm, sign);
  int i = 0;
  while (i < k) {
    if (c[static_cast<std::size_t>(i)] < i) {
      if (i % 2 == 0)
        std::swap(perm[0], perm[static_cast<std::size_t>(i)]);
      else
        std::swap(perm[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])],
                  perm[static_cast<std::size_t>(i)]);
      sign = -sign;
      out.emplace_back(perm, sign);
      ++c[static_cast<std::size_t>(i)];
      i = 0;
    } else {
      c[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
  }
}

}  // namespace

Tensor alternate(const Tensor& t) {
  auto [p, q] = t.valence();
  if (p != 0) throw Error("alternate: input must be fully covariant");
  int k = t.rank();
  if (k <= 1) return t;
  std::vector<std::pair<std::vector<int>, int>> perms;
  permutations_with_sign(k, perms);
  Rational norm(1);
  for (int i = 2; i <= k; ++i) norm *= i;
  Tensor out = Tensor::make(t.dim(), 0, k);
  out.for_each_index([&](const std::vector<int>& idx) {
    Scalar sum;
    std::vector<int> pidx(static_cast<std::size_t>(k));
    for (const auto& [perm, sign] : perms) {
      for (int s = 0; s < k; ++s)
        pidx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])];
      if (sign > 0)
        sum += t.at(pidx);
      else
        sum -= t.at(pidx);
    }
    sum /= norm;
    out.at(idx) = sum;
  });
  return out;
}

bool is_skew(const Tensor& t) {
  auto [p, q] = t.valence();
  if (p != 0) return false;
  return alternate(t) == t;
}

void assign_skew3(Tensor& t, int i, int j, int k, const Scalar& v) {
  auto [p, q] = t.valence();
  if (p != 0 || q != 3) throw Error("assign_skew3: tensor must have valence (0,3)");
  if (i == j || j == k || i == k) throw Error("assign_skew3: indices must be pairwise distinct");
  t.at({i, j, k}) = v;
  t.at({j, k, i}) = v;
  t.at({k, i, j}) = v;
  t.at({j, i, k}) = -v;
  t.at({i, k, j}) = -v;
  t.at({k, j, i}) = -v;
}

}  // namespace skewtor
