#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcent/diagram.hpp"
#include "coxcent/error.hpp"
#include "coxcent/words.hpp"

namespace coxcent {

inline double max_abs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// The standard reflection representation: the symmetric form B has
// B(i,i) = 1, B(i,j) = -cos(pi/m(i,j)) for finite labels and -1 for
// infinity (the parabolic choice), and generator i acts by
// v -> v - 2 B(e_i, v) e_i.
class TitsRepresentation {
 public:
  explicit TitsRepresentation(CoxeterDiagram d) : d_(std::move(d)) {
    int n = d_.size();
    form_.setIdentity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        CoxLabel l = d_.label(i, j);
        double b;
        if (l.is_infinity())
          b = -1.0;
        else if (l.value() == 2)
          b = 0.0;
        else
          b = -std::cos(std::numbers::pi / l.value());
        form_(i, j) = b;
        form_(j, i) = b;
      }
    gens_.reserve(n);
    for (int i = 0; i < n; ++i) {
      Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
      g.row(i) -= 2.0 * form_.row(i);
      gens_.push_back(std::move(g));
    }
    validate();
  }

  int rank() const { return d_.size(); }
  const CoxeterDiagram& diagram() const { return d_; }
  const Eigen::MatrixXd& bilinear_form() const { return form_; }
  const Eigen::MatrixXd& generator(int i) const { return gens_.at(i); }

  // Product of generator matrices in word order; the empty word is the
  // identity.
  Eigen::MatrixXd evaluate(const Word& w) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(rank(), rank());
    for (const auto& letter : w.letters) {
      auto idx = d_.find(letter);
      if (!idx)
        fail(ErrorCode::UnknownLetter, "word letter '" + letter +
                                           "' is not a vertex");
      m *= gens_[*idx];
    }
    return m;
  }

 private:
  void validate() const {
    int n = rank();
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i) {
      if (max_abs(gens_[i] * gens_[i] - id) > 1e-12)
        throw std::logic_error("generator is not an involution");
      if (max_abs(gens_[i].transpose() * form_ * gens_[i] - form_) > 1e-12)
        throw std::logic_error("generator does not preserve the form");
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        CoxLabel l = d_.label(i, j);
        if (!l.is_finite() || l.value() > 8) continue;
        Eigen::MatrixXd p = gens_[i] * gens_[j];
        Eigen::MatrixXd pk = id;
        for (int k = 1; k <= l.value(); ++k) {
          pk *= p;
          double dist = max_abs(pk - id);
          if (k < l.value() && dist < 1e-9)
            throw std::logic_error("braid relation order too small");
          if (k == l.value() && dist > 1e-10)
            throw std::logic_error("braid relation order too large");
        }
      }
  }

  CoxeterDiagram d_;
  Eigen::MatrixXd form_;
  std::vector<Eigen::MatrixXd> gens_;
};

inline TitsRepresentation build_representation(const CoxeterDiagram& d) {
  return TitsRepresentation(d);
}

// Least k <= bound with ||m^k - I|| < tol, or nullopt if the bound is
// exceeded.  Exceeding the bound is reported as-is and never interpreted as
// a proof of infinite order.
inline std::optional<int> element_order(const Eigen::MatrixXd& m, int bound = 50,
                                        double tol = 1e-8) {
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  Eigen::MatrixXd p = m;
  for (int k = 1; k <= bound; ++k) {
    if (max_abs(p - id) < tol) return k;
    p *= m;
  }
  return std::nullopt;
}

// Commutation defect ||ab - ba||.
inline double commutation_defect(const Eigen::MatrixXd& a,
                                 const Eigen::MatrixXd& b) {
  return max_abs(a * b - b * a);
}

}  // namespace coxcent
