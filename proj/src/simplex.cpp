#include "dwindex/simplex.hpp"

#include "dwindex/error.hpp"

#include <cmath>
#include <limits>

namespace dwindex::lp {

namespace {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
    double& rhs(std::size_t r) { return at(r, cols_); }
    // Row `rows_` holds reduced costs; its rhs entry is minus the objective.
    double& cost(std::size_t c) { return at(rows_, c); }

    void pivot(std::size_t row, std::size_t col) {
        const double p = at(row, col);
        for (std::size_t c = 0; c <= cols_; ++c) at(row, c) /= p;
        for (std::size_t r = 0; r <= rows_; ++r) {
            if (r == row) continue;
            const double factor = at(r, col);
            if (factor == 0.0) continue;
            for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= factor * at(row, c);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

// Runs simplex iterations on the current cost row. Columns >= allowed_cols
// never enter. Returns false on unboundedness.
bool iterate(Tableau& t, std::vector<std::size_t>& basis, std::size_t allowed_cols, const SolverOptions& options,
             std::size_t& pivots) {
    while (true) {
        std::size_t entering = allowed_cols;
        for (std::size_t c = 0; c < allowed_cols; ++c) {
            if (t.cost(c) < -options.eps) {
                entering = c;
                break;
            }
        }
        if (entering == allowed_cols) return true;

        std::size_t leaving = t.rows();
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < t.rows(); ++r) {
            const double a = t.at(r, entering);
            if (a <= options.eps) continue;
            const double ratio = t.rhs(r) / a;
            if (ratio < best_ratio - options.eps ||
                (std::abs(ratio - best_ratio) <= options.eps && leaving < t.rows() && basis[r] < basis[leaving])) {
                best_ratio = ratio;
                leaving = r;
            }
        }
        if (leaving == t.rows()) return false;

        if (++pivots > options.max_pivots) throw Error(ErrorCode::LPFailure, "simplex pivot guard exceeded");
        t.pivot(leaving, entering);
        basis[leaving] = entering;
    }
}

} // namespace

Solution solve(const LinearProgram& program, const SolverOptions& options) {
    const std::size_t n = program.objective.size();
    const std::size_t m = program.constraints.size();

    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (const auto& c : program.constraints) {
        if (c.coeffs.size() != n) throw Error(ErrorCode::DimensionMismatch, "constraint width mismatch");
        Relation rel = c.relation;
        if (c.rhs < 0.0 && rel != Relation::Equal)
            rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
        if (rel != Relation::Equal) ++slack_count;
        if (rel != Relation::LessEqual) ++artificial_count;
    }

    const std::size_t real_cols = n + slack_count;
    const std::size_t cols = real_cols + artificial_count;
    Tableau t(m, cols);
    std::vector<std::size_t> basis(m);

    std::size_t next_slack = n;
    std::size_t next_artificial = real_cols;
    for (std::size_t r = 0; r < m; ++r) {
        const auto& c = program.constraints[r];
        const double sign = c.rhs < 0.0 ? -1.0 : 1.0;
        Relation rel = c.relation;
        if (sign < 0.0 && rel != Relation::Equal)
            rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
        for (std::size_t k = 0; k < n; ++k) t.at(r, k) = sign * c.coeffs[k];
        t.rhs(r) = sign * c.rhs;
        if (rel == Relation::LessEqual) {
            t.at(r, next_slack) = 1.0;
            basis[r] = next_slack++;
        } else {
            if (rel == Relation::GreaterEqual) t.at(r, next_slack++) = -1.0;
            t.at(r, next_artificial) = 1.0;
            basis[r] = next_artificial++;
        }
    }

    Solution out;

    // Phase I: minimize the sum of artificials.
    if (artificial_count > 0) {
        for (std::size_t r = 0; r < m; ++r) {
            if (basis[r] < real_cols) continue;
            for (std::size_t c = 0; c <= cols; ++c)
                if (c < real_cols || c == cols) t.cost(c) -= t.at(r, c);
        }
        iterate(t, basis, cols, options, out.pivots);
        if (-t.rhs(m) > 1e-9) {
            out.status = Status::Infeasible;
            return out;
        }
        // Drive remaining zero-level artificials out of the basis.
        for (std::size_t r = 0; r < m; ++r) {
            if (basis[r] < real_cols) continue;
            for (std::size_t c = 0; c < real_cols; ++c) {
                if (std::abs(t.at(r, c)) > 1e-9) {
                    t.pivot(r, c);
                    basis[r] = c;
                    break;
                }
            }
        }
    }

    // Phase II on the original objective, artificial columns frozen.
    for (std::size_t c = 0; c <= cols; ++c) t.cost(c) = c < n ? program.objective[c] : 0.0;
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t b = basis[r];
        const double cb = t.cost(b);
        if (cb == 0.0) continue;
        for (std::size_t c = 0; c <= cols; ++c) t.cost(c) -= cb * t.at(r, c);
    }
    if (!iterate(t, basis, real_cols, options, out.pivots)) {
        out.status = Status::Unbounded;
        return out;
    }

    out.status = Status::Optimal;
    out.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] < n) out.x[basis[r]] = t.rhs(r);
    out.objective = 0.0;
    for (std::size_t k = 0; k < n; ++k) out.objective += program.objective[k] * out.x[k];
    return out;
}

} // namespace dwindex::lp
