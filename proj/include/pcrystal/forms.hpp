#pragma once

// Linear forms on Q^infty with symbolic constants, the piecewise-linear maps
// S_k and S^_k, and the closure computations that produce the inequality
// systems Xi_iota, Xi_iota^(i) and Xi_iota[lambda].

#include "pcrystal/zcrystal.hpp"

#include <sstream>
#include <string>

namespace pcrystal {

/// c + sum_k phi_k x_k where c = sum_m lambda_part[m] lambda_m + absolute.
/// Coefficients are keyed by flat index and kept sorted and nonzero.
class LinearForm {
public:
  using Term = std::pair<int, Int>;

  LinearForm() = default;
  explicit LinearForm(int rank) : lambda_part_(rank, 0) {}

  static LinearForm coordinate(int rank, int k, Int c = 1) {
    LinearForm f(rank);
    f.add_term(k, c);
    return f;
  }

  int rank() const { return static_cast<int>(lambda_part_.size()); }

  Int coefficient(int k) const {
    auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), k,
                               [](const Term &t, int key) { return t.first < key; });
    return it != coeffs_.end() && it->first == k ? it->second : 0;
  }

  void add_term(int k, Int c) {
    if (k < 1) throw crystal_error("form coefficient index must be >= 1");
    auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), k,
                               [](const Term &t, int key) { return t.first < key; });
    if (it != coeffs_.end() && it->first == k) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    } else if (c != 0) {
      coeffs_.insert(it, {k, c});
    }
  }

  void add_lambda(int node, Int c) { lambda_part_.at(node - 1) += c; }
  void add_absolute(Int c) { absolute_ += c; }

  /// this + c * other
  LinearForm &axpy(Int c, const LinearForm &other) {
    if (c == 0) return *this;
    for (auto [k, v] : other.coeffs_) add_term(k, c * v);
    for (int m = 0; m < rank(); ++m) lambda_part_[m] += c * other.lambda_part_.at(m);
    absolute_ += c * other.absolute_;
    return *this;
  }

  LinearForm scaled(Int c) const {
    LinearForm f(rank());
    return f.axpy(c, *this);
  }

  const std::vector<Term> &coeffs() const { return coeffs_; }
  const std::vector<Int> &lambda_part() const { return lambda_part_; }
  Int absolute() const { return absolute_; }

  bool has_constant() const {
    return absolute_ != 0 || std::any_of(lambda_part_.begin(), lambda_part_.end(), [](Int c) { return c != 0; });
  }
  bool is_zero() const { return coeffs_.empty() && !has_constant(); }
  int max_index() const { return coeffs_.empty() ? 0 : coeffs_.back().first; }

  /// Value of the constant at a concrete weight.
  Int constant_at(const Weight &lambda) const {
    if (lambda.rank() != rank()) throw crystal_error("weight length does not match form rank");
    Int c = absolute_;
    for (int m = 0; m < rank(); ++m) c += lambda_part_[m] * lambda.coefficients[m];
    return c;
  }

  Int evaluate(const ZVector &x, const Weight &lambda) const { return constant_at(lambda) + linear_value(x); }

  Int linear_value(const ZVector &x) const {
    Int s = 0;
    for (auto [k, v] : coeffs_) s += v * x[k];
    return s;
  }

  /// Same linear part shifted down by `rows` rows (k -> k + rows * n).
  LinearForm shifted(int rows) const {
    LinearForm f(rank());
    f.lambda_part_ = lambda_part_;
    f.absolute_ = absolute_;
    for (auto [k, v] : coeffs_) f.add_term(k + rows * rank(), v);
    return f;
  }

  LinearForm linear_part() const {
    LinearForm f(rank());
    f.coeffs_ = coeffs_;
    return f;
  }

  auto operator<=>(const LinearForm &) const = default;
  bool operator==(const LinearForm &) const = default;

private:
  std::vector<Term> coeffs_;
  std::vector<Int> lambda_part_;
  Int absolute_ = 0;
};

using FormSet = std::set<LinearForm>;

/// The canonical representative, or nothing for the identically zero form.
/// Terms are kept sorted and nonzero by construction; no rescaling happens.
inline std::optional<LinearForm> canonicalize(const LinearForm &f) {
  if (f.is_zero()) return std::nullopt;
  return f;
}

inline std::string format_form(const LinearForm &f) {
  const int n = f.rank();
  std::ostringstream out;
  bool first = true;
  auto emit = [&](Int c, const std::string &sym) {
    if (c == 0) return;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int a = c < 0 ? -c : c;
    if (a != 1 || sym.empty()) out << a;
    out << sym;
    first = false;
  };
  for (int m = 0; m < n; ++m) emit(f.lambda_part()[m], "λ_" + std::to_string(m + 1));
  if (f.absolute() != 0) emit(f.absolute(), "");
  for (auto [k, v] : f.coeffs())
    emit(v, "x_{" + std::to_string((k - 1) / n + 1) + ";" + std::to_string((k - 1) % n + 1) + "}");
  if (first) out << "0";
  return out.str();
}

// ---- beta and the maps S_k, S^_k ------------------------------------------

/// beta_k = sigma_k - sigma_{k+} = x_k + sum_{k<j<k+} a(i_k, i_j) x_j + x_{k+}.
inline LinearForm beta(const IotaSequence &iota, int k) {
  if (k < 1) throw crystal_error("beta requires k >= 1");
  const int ik = iota.node(k);
  const int kp = iota.next(k);
  LinearForm f(iota.rank());
  f.add_term(k, 1);
  for (int j = k + 1; j < kp; ++j) f.add_term(j, iota.a(ik, iota.node(j)));
  f.add_term(kp, 1);
  return f;
}

enum class Sign { Plus, Minus };

/// beta_k^(+) = beta_k; beta_k^(-) = beta_{k-} when k- > 0 and otherwise
/// -lambda_{i_k} + sum_{1<=j<k} a(i_k, i_j) x_j + x_k.
inline LinearForm beta_pm(const IotaSequence &iota, int k, Sign sign) {
  if (k < 1) throw crystal_error("beta requires k >= 1");
  if (sign == Sign::Plus) return beta(iota, k);
  if (int km = iota.prev(k); km > 0) return beta(iota, km);
  const int ik = iota.node(k);
  LinearForm f(iota.rank());
  f.add_lambda(ik, -1);
  for (int j = 1; j < k; ++j) f.add_term(j, iota.a(ik, iota.node(j)));
  f.add_term(k, 1);
  return f;
}

/// S_k phi. The flag is raised when phi_k < 0 at a first occurrence, where
/// beta_{k-} does not exist; the form is then returned unchanged.
inline LinearForm apply_S(const IotaSequence &iota, int k, const LinearForm &form, bool *violation = nullptr) {
  const Int c = form.coefficient(k);
  if (violation) *violation = false;
  if (c == 0) return form;
  LinearForm out = form;
  if (c > 0) return out.axpy(-c, beta(iota, k));
  if (int km = iota.prev(k); km > 0) return out.axpy(-c, beta(iota, km));
  if (violation) *violation = true;
  return out;
}

/// S^_k phi: as S_k, but the first-occurrence branch uses the lambda form.
inline LinearForm apply_Shat(const IotaSequence &iota, int k, const LinearForm &form) {
  const Int c = form.coefficient(k);
  if (c == 0) return form;
  LinearForm out = form;
  return out.axpy(-c, beta_pm(iota, k, c > 0 ? Sign::Plus : Sign::Minus));
}

/// lambda^(i) = -beta^(-)_{iota^(i)}: carries +lambda_i.
inline LinearForm lambda_form(const IotaSequence &iota, int i) {
  if (i < 1 || i > iota.rank()) throw crystal_error("node out of range");
  return beta_pm(iota, iota.first_occurrence(i), Sign::Minus).scaled(-1);
}

/// xi^(i) = lambda^(i) - <h_i, lambda>.
inline LinearForm xi_form(const IotaSequence &iota, int i) {
  LinearForm f = lambda_form(iota, i);
  f.add_lambda(i, -1);
  return f;
}

// ---- closure ---------------------------------------------------------------

enum class Operator { S, Shat };

struct ViolationEvent {
  LinearForm form;
  int position = 0;
  auto operator<=>(const ViolationEvent &) const = default;
  bool operator==(const ViolationEvent &) const = default;
};

struct ClosureResult {
  FormSet forms;
  std::vector<ViolationEvent> violations;
  bool violated() const { return !violations.empty(); }
};

inline constexpr std::size_t kDefaultClosureCap = 100000;

/// Least set containing the generators and stable under the chosen operator
/// at every position k <= position_bound. Zero forms are dropped.
inline ClosureResult closure(const IotaSequence &iota, const FormSet &generators, Operator op, int position_bound,
                             std::size_t size_cap = kDefaultClosureCap) {
  if (size_cap == 0) throw crystal_error("closure size cap must be positive");
  ClosureResult res;
  std::vector<const LinearForm *> work;
  auto insert = [&](const LinearForm &f) {
    auto c = canonicalize(f);
    if (!c) return;
    auto [it, fresh] = res.forms.insert(std::move(*c));
    if (!fresh) return;
    if (res.forms.size() > size_cap)
      throw crystal_error("closure exceeded its size cap of " + std::to_string(size_cap) + " forms");
    work.push_back(&*it);
  };
  for (const LinearForm &g : generators) insert(g);
  std::set<ViolationEvent> events;
  while (!work.empty()) {
    const LinearForm *f = work.back();
    work.pop_back();
    std::vector<int> support;
    for (auto [k, v] : f->coeffs())
      if (k <= position_bound) support.push_back(k);
    for (int k : support) {
      if (op == Operator::S) {
        bool bad = false;
        LinearForm g = apply_S(iota, k, *f, &bad);
        if (bad) events.insert({*f, k});
        else insert(g);
      } else {
        insert(apply_Shat(iota, k, *f));
      }
    }
  }
  res.violations.assign(events.begin(), events.end());
  return res;
}

/// Xi_iota^(i): the S-closure of xi^(i).
inline ClosureResult xi_i_closure(const IotaSequence &iota, int i, int position_bound,
                                  std::size_t size_cap = kDefaultClosureCap) {
  return closure(iota, {xi_form(iota, i)}, Operator::S, position_bound, size_cap);
}

/// S^-closure of lambda^(i), the node-i part of Xi_iota[lambda].
inline ClosureResult lambda_i_closure(const IotaSequence &iota, int i, int position_bound,
                                      std::size_t size_cap = kDefaultClosureCap) {
  return closure(iota, {lambda_form(iota, i)}, Operator::Shat, position_bound, size_cap);
}

/// {<h_i, lambda> + psi : psi in Xi_iota^(i)}.
inline FormSet add_lambda_constant(const FormSet &forms, int i) {
  FormSet out;
  for (LinearForm f : forms) {
    f.add_lambda(i, 1);
    if (auto c = canonicalize(f)) out.insert(*c);
  }
  return out;
}

// ---- positivity ------------------------------------------------------------

inline bool first_occurrence_nonnegative(const LinearForm &f, int rank) {
  for (auto [k, v] : f.coeffs()) {
    if (k > rank) break;
    if (v < 0) return false;
  }
  return true;
}

/// Every form has nonnegative coefficients on the first-occurrence positions.
inline bool check_positivity(const FormSet &forms) {
  return std::all_of(forms.begin(), forms.end(),
                     [](const LinearForm &f) { return first_occurrence_nonnegative(f, f.rank()); });
}

/// As check_positivity over Xi_iota and every Xi_iota^(j), with the xi^(i)
/// themselves exempt.
inline bool check_strict_positivity(const IotaSequence &iota, const FormSet &xi_closure,
                                    const std::vector<FormSet> &xi_i_closures) {
  FormSet exempt;
  for (int i = 1; i <= iota.rank(); ++i) exempt.insert(xi_form(iota, i));
  auto ok = [&](const LinearForm &f) { return exempt.count(f) || first_occurrence_nonnegative(f, iota.rank()); };
  if (!std::all_of(xi_closure.begin(), xi_closure.end(), ok)) return false;
  for (const FormSet &s : xi_i_closures)
    if (!std::all_of(s.begin(), s.end(), ok)) return false;
  return true;
}

/// 0 satisfies every inequality at this lambda.
inline bool check_ample(const FormSet &forms, const Weight &lambda) {
  return std::all_of(forms.begin(), forms.end(), [&](const LinearForm &f) { return f.constant_at(lambda) >= 0; });
}

} // namespace pcrystal
