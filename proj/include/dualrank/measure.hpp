#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "dualrank/errors.hpp"

namespace dualrank {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// An empirical probability measure on R^d: n distinct atoms with strictly
/// positive weights summing to one. Doubles as a risky prospect. Immutable
/// after construction; atoms are kept in lexicographic order and duplicate
/// rows are merged by summing their weights, so two measures built from the
/// same (row, weight) multiset compare equal regardless of input order.
class DiscreteMeasure {
public:
    /// Builds a measure from sample rows (n x d). Absent weights mean 1/n
    /// each; given weights must be nonnegative with positive sum and are
    /// renormalized. Zero-weight rows are dropped.
    static DiscreteMeasure from_samples(const Matrix& rows,
                                        const std::optional<Vector>& weights = std::nullopt);

    /// Point mass at c.
    static DiscreteMeasure point(const Vector& c);

    const Matrix& atoms() const { return atoms_; }
    const Vector& weights() const { return weights_; }
    Eigen::Index size() const { return atoms_.rows(); }
    Eigen::Index dim() const { return atoms_.cols(); }
    Vector atom(Eigen::Index k) const { return atoms_.row(k).transpose(); }

    /// True when the input weights were off from sum 1 by more than 1e-12
    /// and had to be renormalized.
    bool renormalized() const { return renormalized_; }

    /// Weighted average of the atoms.
    Vector mean() const;

    /// Atoms exactly equal, weights within 1e-12.
    bool operator==(const DiscreteMeasure& other) const;
    bool operator!=(const DiscreteMeasure& other) const { return !(*this == other); }

private:
    DiscreteMeasure() = default;
    Matrix atoms_;
    Vector weights_;
    bool renormalized_ = false;
};

/// Measure with every atom negated (re-canonicalized).
DiscreteMeasure negate_atoms(const DiscreteMeasure& m);

/// Equal weights at ranks (k-0.5)/n, k=1..n (d=1). The grid used by
/// univariate weight schemes.
DiscreteMeasure rank_grid(Eigen::Index n);

/// Equal weights at k/n, k=1..n (d=1). Atom positions coincide with their
/// cumulative masses, which makes transport potentials against this grid
/// reproduce CDF integrals without discretization bias.
DiscreteMeasure cdf_grid(Eigen::Index n);

/// d-fold product of cdf_grid(k): k^d equal-weight atoms in (0,1]^d.
DiscreteMeasure product_grid(Eigen::Index d, Eigen::Index k);

/// An allocation of d attributes over n individuals (rows). Entries must be
/// finite and nonnegative.
class Allocation {
public:
    explicit Allocation(const Matrix& rows,
                        std::vector<std::string> labels = {});

    const Matrix& rows() const { return rows_; }
    Eigen::Index individuals() const { return rows_.rows(); }
    Eigen::Index attributes() const { return rows_.cols(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Individuals as an equal-weight empirical measure (anonymity: row
    /// order does not matter).
    DiscreteMeasure to_measure() const;

private:
    Matrix rows_;
    std::vector<std::string> labels_;
};

}  // namespace dualrank
