// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "impulseper/common.hpp"

namespace impulseper {

/// Node set of a one-dimensional interval [a, b]. Nodes are strictly
/// increasing with nodes.front() == a and nodes.back() == b. Designated
/// jump locations are marked in breakpoint_flags and are stored bitwise
/// as nodes, so jumps are never interpolated across.
class Grid {
public:
    Grid(std::vector<double> nodes, std::vector<std::uint8_t> breakpoint_flags);

    /// Uniform grid with n_cells cells.
    static Grid uniform(double a, double b, std::size_t n_cells);

    /// Uniform base grid merged with mandatory breakpoints. Base nodes
    /// closer than a quarter cell to a breakpoint are dropped so that
    /// cells never degenerate.
    static Grid merged(double a, double b, std::size_t n_cells,
                       std::span<const double> breakpoints);

    double a() const { return nodes_.front(); }
    double b() const { return nodes_.back(); }
    std::size_t size() const { return nodes_.size(); }
    std::size_t cells() const { return nodes_.size() - 1; }
    double node(std::size_t i) const { return nodes_[i]; }
    const std::vector<double>& nodes() const { return nodes_; }
    bool is_breakpoint(std::size_t i) const { return flags_[i] != 0; }

    /// Index i such that nodes[i] <= t <= nodes[i+1]. For t == b returns
    /// the last cell. Throws DomainError outside [a, b] (beyond a small
    /// rounding slack, within which t is clamped).
    std::size_t cell_of(double t) const;

    /// Node index if t equals a stored node bitwise.
    std::optional<std::size_t> exact_node(double t) const;

    bool same_nodes(const Grid& other) const;

private:
    std::vector<double> nodes_;
    std::vector<std::uint8_t> flags_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Numerical regulated function on a grid: left-continuous at jump
/// nodes, with right limits stored sparsely. Between nodes the function
/// is the linear interpolant of the piece, where a piece that starts at
/// a jump node starts from the stored right limit.
class RegulatedGridFn {
public:
    RegulatedGridFn(GridPtr grid, std::vector<double> values,
                    std::map<std::size_t, double> right_limits = {});

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    const std::map<std::size_t, double>& right_limits() const { return right_limits_; }

    double value_at(std::size_t i) const { return values_[i]; }

    /// Value used as the left end of the piece starting at node i:
    /// the right limit when one is stored, else the node value.
    double piece_start_value(std::size_t i) const;

    /// Left-continuous evaluation (exact node value at nodes, piece-local
    /// linear interpolation elsewhere).
    double eval(double t) const;

    /// Like eval, but an evaluation landing exactly on a jump node takes
    /// the stored right limit.
    double eval_side(double t, Side side) const;

    /// Right limit at t. At a jump node this is the stored limit, at any
    /// other point it coincides with eval. Undefined at t == b.
    double right_limit(double t) const;

    double sup_norm() const;

    bool has_right_limit(std::size_t i) const { return right_limits_.count(i) != 0; }

private:
    GridPtr grid_;
    std::vector<double> values_;
    std::map<std::size_t, double> right_limits_;
};

/// Sum of per-piece trapezoid rules; the left end of a piece that starts
/// at a jump node uses the stored right limit. Exact for grid-aligned
/// piecewise-linear inputs.
double trapezoid_integral(const RegulatedGridFn& f);

/// History segment phi(tau) = f(t + tau) on [-r, 0]. Breakpoints shift
/// with the window. Throws DomainError when [t - r, t] exits f's domain.
RegulatedGridFn history_segment(const RegulatedGridFn& f, double t, double r);

/// Pointwise product on a shared grid (nodewise values, jump-aware).
RegulatedGridFn multiply(const RegulatedGridFn& f, const RegulatedGridFn& g);

/// CSV rows "t,value,right_limit?" with an empty third field at nodes
/// without a stored right limit.
void write_csv(const RegulatedGridFn& f, std::ostream& os);

} // namespace impulseper
