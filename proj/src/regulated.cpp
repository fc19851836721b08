// SPDX-License-Identifier: Apache-2.0
#include "impulseper/regulated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace impulseper {

namespace {

double domain_slack(double a, double b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return 64.0 * std::numeric_limits<double>::epsilon() * scale;
}

} // namespace

Grid::Grid(std::vector<double> nodes, std::vector<std::uint8_t> breakpoint_flags)
    : nodes_(std::move(nodes)), flags_(std::move(breakpoint_flags)) {
    if (nodes_.size() < 2)
        throw ValidationError("grid needs at least two nodes");
    if (flags_.size() != nodes_.size())
        throw ValidationError("grid flags size mismatch");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (!(nodes_[i] < nodes_[i + 1]))
            throw ValidationError("grid nodes must be strictly increasing");
}

Grid Grid::uniform(double a, double b, std::size_t n_cells) {
    if (!(a < b))
        throw ValidationError("grid interval must satisfy a < b");
    if (n_cells == 0)
        throw ValidationError("grid needs at least one cell");
    std::vector<double> nodes(n_cells + 1);
    for (std::size_t j = 0; j <= n_cells; ++j)
        nodes[j] = a + (b - a) * static_cast<double>(j) / static_cast<double>(n_cells);
    nodes.front() = a;
    nodes.back() = b;
    return Grid(std::move(nodes), std::vector<std::uint8_t>(n_cells + 1, 0));
}

Grid Grid::merged(double a, double b, std::size_t n_cells,
                  std::span<const double> breakpoints) {
    if (!(a < b))
        throw ValidationError("grid interval must satisfy a < b");
    const double h = (b - a) / static_cast<double>(n_cells);
    const double dup_tol = 1e-12 * (b - a);

    // Sorted, deduplicated breakpoints inside (a, b); the first occurrence
    // of near-coincident values wins so impulse times keep their exact bits.
    std::vector<double> bps;
    for (double p : breakpoints) {
        if (p <= a + dup_tol || p >= b - dup_tol)
            continue;
        bool dup = false;
        for (double q : bps)
            if (std::abs(p - q) <= dup_tol) { dup = true; break; }
        if (!dup)
            bps.push_back(p);
    }
    std::sort(bps.begin(), bps.end());

    std::vector<double> nodes;
    std::vector<std::uint8_t> flags;
    nodes.reserve(n_cells + bps.size() + 2);
    auto near_breakpoint = [&](double t) {
        for (double p : bps)
            if (std::abs(t - p) < 0.25 * h) return true;
        return false;
    };
    for (std::size_t j = 0; j <= n_cells; ++j) {
        double t = a + (b - a) * static_cast<double>(j) / static_cast<double>(n_cells);
        if (j == 0) t = a;
        if (j == n_cells) t = b;
        if (j != 0 && j != n_cells && near_breakpoint(t))
            continue;
        nodes.push_back(t);
        flags.push_back(0);
    }
    for (double p : bps) {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
        auto fit = flags.begin() + (it - nodes.begin());
        nodes.insert(it, p);
        flags.insert(fit, 1);
    }
    // Flag endpoints that were requested as breakpoints.
    for (double p : breakpoints) {
        if (std::abs(p - a) <= dup_tol) flags.front() = 1;
        if (std::abs(p - b) <= dup_tol) flags.back() = 1;
    }
    return Grid(std::move(nodes), std::move(flags));
}

std::size_t Grid::cell_of(double t) const {
    const double slack = domain_slack(a(), b());
    if (t < a() - slack || t > b() + slack)
        throw DomainError("evaluation point " + format_double(t) + " outside [" +
                          format_double(a()) + ", " + format_double(b()) + "]");
    if (t <= a()) return 0;
    if (t >= b()) return nodes_.size() - 2;
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
    return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

std::optional<std::size_t> Grid::exact_node(double t) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t);
    if (it != nodes_.end() && *it == t)
        return static_cast<std::size_t>(it - nodes_.begin());
    return std::nullopt;
}

bool Grid::same_nodes(const Grid& other) const {
    return nodes_ == other.nodes_;
}

RegulatedGridFn::RegulatedGridFn(GridPtr grid, std::vector<double> values,
                                 std::map<std::size_t, double> right_limits)
    : grid_(std::move(grid)), values_(std::move(values)),
      right_limits_(std::move(right_limits)) {
    if (!grid_)
        throw ValidationError("regulated function needs a grid");
    if (values_.size() != grid_->size())
        throw ValidationError("regulated function values/grid size mismatch");
    for (const auto& [i, v] : right_limits_) {
        (void)v;
        if (i >= grid_->size() || !grid_->is_breakpoint(i))
            throw ValidationError("right limit stored at a non-breakpoint node");
    }
}

double RegulatedGridFn::piece_start_value(std::size_t i) const {
    auto it = right_limits_.find(i);
    return it == right_limits_.end() ? values_[i] : it->second;
}

double RegulatedGridFn::eval(double t) const {
    const std::size_t i = grid_->cell_of(t);
    if (t == grid_->node(i)) return values_[i];
    const double t0 = grid_->node(i), t1 = grid_->node(i + 1);
    if (t == t1) return values_[i + 1];
    const double v0 = piece_start_value(i);
    const double v1 = values_[i + 1];
    const double w = (t - t0) / (t1 - t0);
    return v0 + w * (v1 - v0);
}

double RegulatedGridFn::eval_side(double t, Side side) const {
    if (side == Side::Right) {
        if (auto i = grid_->exact_node(t)) {
            auto it = right_limits_.find(*i);
            if (it != right_limits_.end()) return it->second;
        }
    }
    return eval(t);
}

double RegulatedGridFn::right_limit(double t) const {
    if (t >= grid_->b())
        throw DomainError("no right limit at the right endpoint");
    return eval_side(t, Side::Right);
}

double RegulatedGridFn::sup_norm() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    for (const auto& [i, v] : right_limits_) {
        (void)i;
        m = std::max(m, std::abs(v));
    }
    return m;
}

double trapezoid_integral(const RegulatedGridFn& f) {
    const Grid& g = f.grid();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        const double dt = g.node(i + 1) - g.node(i);
        sum += 0.5 * (f.piece_start_value(i) + f.value_at(i + 1)) * dt;
    }
    return sum;
}

RegulatedGridFn history_segment(const RegulatedGridFn& f, double t, double r) {
    const Grid& g = f.grid();
    const double lo = t - r, hi = t;
    const double slack = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max({1.0, std::abs(g.a()), std::abs(g.b())});
    if (lo < g.a() - slack || hi > g.b() + slack)
        throw DomainError("history window [" + format_double(lo) + ", " +
                          format_double(hi) + "] exits the function domain");

    std::vector<double> nodes;
    std::vector<std::uint8_t> flags;
    std::vector<double> values;
    std::map<std::size_t, double> rlims;

    nodes.push_back(-r);
    flags.push_back(0);
    values.push_back(f.eval(lo));
    if (auto i0 = g.exact_node(lo); i0 && f.has_right_limit(*i0)) {
        flags.front() = 1;
        rlims[0] = f.right_limits().at(*i0);
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double s = g.node(i);
        if (s <= lo || s >= hi) continue;
        nodes.push_back(s - t);
        flags.push_back(g.is_breakpoint(i) ? 1 : 0);
        values.push_back(f.value_at(i));
        if (f.has_right_limit(i))
            rlims[nodes.size() - 1] = f.right_limits().at(i);
    }
    nodes.push_back(0.0);
    flags.push_back(0);
    values.push_back(f.eval(hi));

    auto grid = std::make_shared<Grid>(std::move(nodes), std::move(flags));
    return RegulatedGridFn(std::move(grid), std::move(values), std::move(rlims));
}

RegulatedGridFn multiply(const RegulatedGridFn& f, const RegulatedGridFn& g) {
    if (!f.grid().same_nodes(g.grid()))
        throw AlignmentError("pointwise product requires a shared grid");
    std::vector<double> values(f.grid().size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = f.value_at(i) * g.value_at(i);
    std::map<std::size_t, double> rlims;
    for (std::size_t i = 0; i + 1 < f.grid().size(); ++i) {
        if (f.has_right_limit(i) || g.has_right_limit(i))
            rlims[i] = f.piece_start_value(i) * g.piece_start_value(i);
    }
    return RegulatedGridFn(f.grid_ptr(), std::move(values), std::move(rlims));
}

void write_csv(const RegulatedGridFn& f, std::ostream& os) {
    os << "t,value,right_limit\n";
    for (std::size_t i = 0; i < f.grid().size(); ++i) {
        os << format_double(f.grid().node(i)) << ',' << format_double(f.value_at(i)) << ',';
        if (f.has_right_limit(i))
            os << format_double(f.right_limits().at(i));
        os << '\n';
    }
}

} // namespace impulseper
