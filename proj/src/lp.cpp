#include "lppm/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lppm/errors.hpp"

namespace lppm::lp {

namespace {

constexpr double kPivotTol = 1e-10;   // coefficients below this are treated as zero
constexpr double kEnterTol = 1e-9;    // reduced cost threshold for entering columns
constexpr double kDegenTol = 1e-12;   // step sizes below this count as degenerate

struct RowInfo {
    int sign = 1;        // -1 if the row was negated to make rhs nonnegative
    int slack_col = -1;  // inequality rows only
    int art_col = -1;    // equality rows and negated inequality rows
    bool is_eq = false;
    int original_index = 0;  // index into lp.ineq or lp.eq
};

// Dense two-phase tableau. Maintains the constraint rows plus two reduced-cost
// rows (phase-1 and phase-2 objectives) updated by the same row operations.
class Tableau {
  public:
    explicit Tableau(const LinearProgram& lp) : lp_(lp) {
        const int n = lp.n_vars;
        const int m1 = static_cast<int>(lp.ineq.size());
        const int m2 = static_cast<int>(lp.eq.size());
        m_ = m1 + m2;

        int n_art = m2;
        for (const auto& row : lp.ineq)
            if (row.rhs < 0.0) ++n_art;

        slack_begin_ = n;
        art_begin_ = n + m1;
        cols_ = n + m1 + n_art;

        rows_.assign(m_, std::vector<double>(cols_ + 1, 0.0));
        info_.resize(m_);
        basis_.assign(m_, -1);
        is_artificial_.assign(cols_, false);
        for (int j = art_begin_; j < cols_; ++j) is_artificial_[j] = true;

        int next_art = art_begin_;
        for (int i = 0; i < m1; ++i) {
            const auto& src = lp.ineq[i];
            auto& row = rows_[i];
            const int sign = src.rhs < 0.0 ? -1 : 1;
            for (int j = 0; j < n; ++j) row[j] = sign * src.coeffs[j];
            row[slack_begin_ + i] = sign;  // slack (or surplus when negated)
            row[cols_] = sign * src.rhs;
            info_[i] = {sign, slack_begin_ + i, -1, false, i};
            if (sign < 0) {
                info_[i].art_col = next_art;
                row[next_art] = 1.0;
                basis_[i] = next_art++;
            } else {
                basis_[i] = slack_begin_ + i;
            }
        }
        for (int k = 0; k < m2; ++k) {
            const auto& src = lp.eq[k];
            const int i = m1 + k;
            auto& row = rows_[i];
            const int sign = src.rhs < 0.0 ? -1 : 1;
            for (int j = 0; j < n; ++j) row[j] = sign * src.coeffs[j];
            row[cols_] = sign * src.rhs;
            info_[i] = {sign, -1, next_art, true, k};
            row[next_art] = 1.0;
            basis_[i] = next_art++;
        }

        // Phase-2 reduced costs start at the raw objective (all initial basic
        // columns have zero cost).
        z2_.assign(cols_, 0.0);
        for (int j = 0; j < n; ++j) z2_[j] = lp.objective[j];
        z2_val_ = 0.0;

        // Phase-1 objective: maximize minus the sum of artificials.
        z1_.assign(cols_, 0.0);
        z1_val_ = 0.0;
        for (int i = 0; i < m_; ++i) {
            if (!is_artificial_[basis_[i]]) continue;
            for (int j = 0; j < cols_; ++j) z1_[j] += rows_[i][j];
            z1_val_ -= rows_[i][cols_];
        }
        for (int j = art_begin_; j < cols_; ++j) z1_[j] -= 1.0;

        max_rhs_ = 0.0;
        for (int i = 0; i < m_; ++i) max_rhs_ = std::max(max_rhs_, std::abs(rows_[i][cols_]));
    }

    LpSolution run() {
        LpSolution sol;

        if (has_artificials()) {
            if (!price_loop(/*phase1=*/true)) {
                throw NumericalError("phase-1 simplex reported unbounded");
            }
            if (-z1_val_ > 1e-8 * (1.0 + max_rhs_)) {
                sol.status = Status::infeasible;
                sol.iterations = iterations_;
                sol.blands_rule_engaged = blands_;
                return sol;
            }
            pivot_out_artificials();
        }

        if (!price_loop(/*phase1=*/false)) {
            sol.status = Status::unbounded;
            sol.iterations = iterations_;
            sol.blands_rule_engaged = blands_;
            return sol;
        }

        sol.status = Status::optimal;
        sol.x.assign(lp_.n_vars, 0.0);
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < lp_.n_vars) {
                sol.x[basis_[i]] = std::max(0.0, rows_[i][cols_]);
            }
        }
        sol.objective_value = z2_val_;
        extract_duals(sol);
        sol.iterations = iterations_;
        sol.blands_rule_engaged = blands_;
        return sol;
    }

  private:
    bool has_artificials() const { return art_begin_ < cols_; }

    bool enterable(int j, bool phase1) const {
        if (is_artificial_[j]) return false;  // artificials never re-enter
        if (phase1) return true;
        return true;
    }

    // Returns false on unbounded (no leaving row for an improving column).
    bool price_loop(bool phase1) {
        auto& z = phase1 ? z1_ : z2_;
        const long max_iter = 100000L + 50L * (m_ + cols_);
        const long bland_threshold = 5L * (m_ + cols_);

        for (;;) {
            if (phase1 && -z1_val_ <= 1e-10 * (1.0 + max_rhs_)) return true;

            int enter = -1;
            if (!blands_) {
                double best = kEnterTol;
                for (int j = 0; j < cols_; ++j) {
                    if (!enterable(j, phase1)) continue;
                    if (z[j] > best) {
                        best = z[j];
                        enter = j;
                    }
                }
            } else {
                for (int j = 0; j < cols_; ++j) {
                    if (!enterable(j, phase1)) continue;
                    if (z[j] > kEnterTol) {
                        enter = j;
                        break;
                    }
                }
            }
            if (enter < 0) return true;  // no improving column: optimal for this phase

            int leave = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m_; ++i) {
                const double a = rows_[i][enter];
                if (a <= kPivotTol) continue;
                const double rhs = std::max(0.0, rows_[i][cols_]);
                const double ratio = rhs / a;
                if (ratio < best_ratio - 1e-12) {
                    best_ratio = ratio;
                    leave = i;
                } else if (ratio <= best_ratio + 1e-12 && leave >= 0) {
                    if (blands_) {
                        if (basis_[i] < basis_[leave]) leave = i;
                    } else if (a > rows_[leave][enter]) {
                        leave = i;  // prefer larger pivot elements for stability
                    }
                }
            }
            if (leave < 0) {
                if (phase1) throw NumericalError("phase-1 simplex reported unbounded");
                return false;
            }

            if (best_ratio <= kDegenTol) {
                if (++degenerate_pivots_ > bland_threshold) blands_ = true;
            }
            pivot(leave, enter, phase1);

            if (++iterations_ > max_iter) {
                throw NumericalError("simplex iteration limit exceeded");
            }
        }
    }

    void pivot(int r, int s, bool phase1) {
        auto& prow = rows_[r];
        const double inv = 1.0 / prow[s];
        for (int j = 0; j <= cols_; ++j) prow[j] *= inv;
        prow[s] = 1.0;

        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            const double f = rows_[i][s];
            if (std::abs(f) <= 0.0) continue;
            auto& row = rows_[i];
            for (int j = 0; j <= cols_; ++j) row[j] -= f * prow[j];
            row[s] = 0.0;
        }

        auto eliminate = [&](std::vector<double>& z, double& zval) {
            const double f = z[s];
            if (f == 0.0) return;
            for (int j = 0; j < cols_; ++j) z[j] -= f * prow[j];
            z[s] = 0.0;
            zval += f * prow[cols_];
        };
        if (phase1) eliminate(z1_, z1_val_);
        eliminate(z2_, z2_val_);

        basis_[r] = s;
    }

    // After a feasible phase 1, swap any artificial still in the basis for a
    // structural or slack column. Rows where that is impossible are redundant
    // and stay inert.
    void pivot_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (!is_artificial_[basis_[i]]) continue;
            int col = -1;
            for (int j = 0; j < art_begin_; ++j) {
                if (std::abs(rows_[i][j]) > kPivotTol) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) pivot(i, col, /*phase1=*/true);
        }
    }

    void extract_duals(LpSolution& sol) const {
        sol.duals_ineq.assign(lp_.ineq.size(), 0.0);
        sol.duals_eq.assign(lp_.eq.size(), 0.0);
        for (int i = 0; i < m_; ++i) {
            const auto& ri = info_[i];
            // Dual of the transformed row, read from the reduced cost of its
            // identity column (artificial if present, else the slack).
            double w;
            if (ri.art_col >= 0) {
                w = -z2_[ri.art_col];
            } else {
                w = -z2_[ri.slack_col];
            }
            const double dual = ri.sign * w;
            if (ri.is_eq) {
                sol.duals_eq[ri.original_index] = dual;
            } else {
                sol.duals_ineq[ri.original_index] = dual;
            }
        }
        // Clean sign noise on inequality multipliers.
        for (auto& y : sol.duals_ineq) {
            if (y < 0.0 && y > -1e-9) y = 0.0;
        }
    }

    const LinearProgram& lp_;
    int m_ = 0;
    int cols_ = 0;
    int slack_begin_ = 0;
    int art_begin_ = 0;
    std::vector<std::vector<double>> rows_;
    std::vector<RowInfo> info_;
    std::vector<int> basis_;
    std::vector<bool> is_artificial_;
    std::vector<double> z1_, z2_;
    double z1_val_ = 0.0, z2_val_ = 0.0;
    double max_rhs_ = 0.0;
    long iterations_ = 0;
    long degenerate_pivots_ = 0;
    bool blands_ = false;
};

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::optimal: return "optimal";
        case Status::infeasible: return "infeasible";
        case Status::unbounded: return "unbounded";
    }
    return "unknown";
}

void LinearProgram::check_well_formed() const {
    if (n_vars < 0) throw ValidationError("lp: negative variable count");
    if (static_cast<int>(objective.size()) != n_vars)
        throw ValidationError("lp: objective length does not match n_vars");
    auto check_rows = [&](const std::vector<Row>& rows, const char* kind) {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].coeffs.size()) != n_vars)
                throw ValidationError(std::string("lp: ") + kind + " row " +
                                      std::to_string(i) + " has wrong length");
            for (double c : rows[i].coeffs)
                if (!std::isfinite(c))
                    throw ValidationError(std::string("lp: non-finite coefficient in ") + kind);
            if (!std::isfinite(rows[i].rhs))
                throw ValidationError(std::string("lp: non-finite rhs in ") + kind);
        }
    };
    check_rows(ineq, "inequality");
    check_rows(eq, "equality");
    for (double c : objective)
        if (!std::isfinite(c)) throw ValidationError("lp: non-finite objective coefficient");
}

LpSolution solve(const LinearProgram& lp) {
    lp.check_well_formed();
    Tableau t(lp);
    return t.run();
}

VerifyReport verify(const LinearProgram& lp, const LpSolution& sol) {
    if (sol.status != Status::optimal)
        throw ValidationError("verify: solution status is not optimal");
    lp.check_well_formed();

    VerifyReport rep;
    const auto& x = sol.x;

    double primal = 0.0;
    for (double v : x) primal = std::max(primal, -v);
    for (const auto& row : lp.ineq) {
        double lhs = 0.0;
        for (int j = 0; j < lp.n_vars; ++j) lhs += row.coeffs[j] * x[j];
        primal = std::max(primal, lhs - row.rhs);
    }
    for (const auto& row : lp.eq) {
        double lhs = 0.0;
        for (int j = 0; j < lp.n_vars; ++j) lhs += row.coeffs[j] * x[j];
        primal = std::max(primal, std::abs(lhs - row.rhs));
    }
    rep.primal_residual = primal;

    // Dual feasibility: A^T y + E^T z >= c componentwise, y >= 0.
    double dualres = 0.0;
    for (double y : sol.duals_ineq) dualres = std::max(dualres, -y);
    std::vector<double> reduced(lp.n_vars, 0.0);
    for (size_t i = 0; i < lp.ineq.size(); ++i)
        for (int j = 0; j < lp.n_vars; ++j)
            reduced[j] += lp.ineq[i].coeffs[j] * sol.duals_ineq[i];
    for (size_t k = 0; k < lp.eq.size(); ++k)
        for (int j = 0; j < lp.n_vars; ++j)
            reduced[j] += lp.eq[k].coeffs[j] * sol.duals_eq[k];
    for (int j = 0; j < lp.n_vars; ++j)
        dualres = std::max(dualres, lp.objective[j] - reduced[j]);
    rep.dual_residual = dualres;

    double primal_obj = 0.0;
    for (int j = 0; j < lp.n_vars; ++j) primal_obj += lp.objective[j] * x[j];
    double dual_obj = 0.0;
    for (size_t i = 0; i < lp.ineq.size(); ++i) dual_obj += lp.ineq[i].rhs * sol.duals_ineq[i];
    for (size_t k = 0; k < lp.eq.size(); ++k) dual_obj += lp.eq[k].rhs * sol.duals_eq[k];
    rep.duality_gap = std::abs(primal_obj - dual_obj) / (1.0 + std::abs(primal_obj));

    double cs = 0.0;
    for (size_t i = 0; i < lp.ineq.size(); ++i) {
        double lhs = 0.0;
        for (int j = 0; j < lp.n_vars; ++j) lhs += lp.ineq[i].coeffs[j] * x[j];
        cs = std::max(cs, std::abs(sol.duals_ineq[i] * (lp.ineq[i].rhs - lhs)));
    }
    for (int j = 0; j < lp.n_vars; ++j)
        cs = std::max(cs, std::abs(x[j] * (reduced[j] - lp.objective[j])));
    rep.complementary_slackness = cs;

    rep.max_residual = std::max({rep.primal_residual, rep.dual_residual, rep.duality_gap,
                                 rep.complementary_slackness});
    return rep;
}

std::string dump(const LinearProgram& lp) {
    std::ostringstream os;
    auto name = [&](int j) {
        if (j < static_cast<int>(lp.var_names.size()) && !lp.var_names[j].empty())
            return lp.var_names[j];
        return "x" + std::to_string(j);
    };
    os << "maximize:";
    for (int j = 0; j < lp.n_vars; ++j)
        if (lp.objective[j] != 0.0) os << ' ' << lp.objective[j] << '*' << name(j);
    os << '\n';
    auto print_rows = [&](const std::vector<LinearProgram::Row>& rows, const char* rel) {
        for (const auto& row : rows) {
            bool any = false;
            for (int j = 0; j < lp.n_vars; ++j) {
                if (row.coeffs[j] == 0.0) continue;
                os << (any ? " " : "  ") << row.coeffs[j] << '*' << name(j);
                any = true;
            }
            if (!any) os << "  0";
            os << ' ' << rel << ' ' << row.rhs << '\n';
        }
    };
    print_rows(lp.ineq, "<=");
    print_rows(lp.eq, "=");
    os << "  x >= 0\n";
    return os.str();
}

}  // namespace lppm::lp
