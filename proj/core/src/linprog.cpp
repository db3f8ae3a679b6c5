#include "tropfw/linprog.hpp"

#include "tropfw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropfw {

// ---------------------------------------------------------------------------
// LpProblem
// ---------------------------------------------------------------------------

LpProblem::LpProblem(std::size_t var_count) : var_count_(var_count) {
    if (var_count == 0) throw LpFormatError("LpProblem needs at least one variable");
    cost_.assign(var_count, Rational(0));
    lower_.assign(var_count, std::nullopt);
    upper_.assign(var_count, std::nullopt);
}

void LpProblem::set_objective(std::vector<Rational> cost) {
    if (cost.size() != var_count_)
        throw LpFormatError("objective length " + std::to_string(cost.size()) +
                            " != variable count " + std::to_string(var_count_));
    cost_ = std::move(cost);
}

void LpProblem::add_constraint(const std::vector<Rational>& row, Sense sense, Rational rhs) {
    if (row.size() != var_count_)
        throw LpFormatError("constraint length " + std::to_string(row.size()) +
                            " != variable count " + std::to_string(var_count_));
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (std::size_t v = 0; v < row.size(); ++v)
        if (row[v] != 0) entries.emplace_back(v, row[v]);
    constraints_.push_back({std::move(entries), sense, std::move(rhs)});
}

void LpProblem::add_constraint_sparse(std::vector<std::pair<std::size_t, Rational>> entries,
                                      Sense sense, Rational rhs) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].first >= var_count_)
            throw LpFormatError("constraint references variable " +
                                std::to_string(entries[k].first) + " out of range");
        if (k && entries[k].first == entries[k - 1].first)
            throw LpFormatError("constraint repeats variable " +
                                std::to_string(entries[k].first));
    }
    std::erase_if(entries, [](const auto& e) { return e.second == 0; });
    constraints_.push_back({std::move(entries), sense, std::move(rhs)});
}

void LpProblem::set_lower_bound(std::size_t var, Rational lo) {
    if (var >= var_count_) throw LpFormatError("bound on variable out of range");
    lower_[var] = std::move(lo);
}

void LpProblem::set_upper_bound(std::size_t var, Rational hi) {
    if (var >= var_count_) throw LpFormatError("bound on variable out of range");
    upper_[var] = std::move(hi);
}

// ---------------------------------------------------------------------------
// Solver internals.
//
// The problem is flattened to row form (min c.z, a_j.z >= b_j, z free), then
// solved through its dual in standard form:
//
//     min q.w   s.t.  D w = e,  w >= 0,     D = A^T, e = c, q = -b.
//
// A revised simplex runs on the v x v basis, where v is the primal variable
// count -- small for our workloads even when the column count (one per primal
// constraint) is large. Rows of (D | e) with e_i < 0 are negated once so the
// all-artificial start basis is feasible; `sign` records the flips. From an
// optimal basis the primal point is z_i = -sign_i * pi_i (pi the simplex
// multipliers), the reduced cost of column j equals a_j.z - b_j, and the
// basic columns are v linearly independent primal constraints tight at z, so
// z is a vertex of the primal polyhedron whenever one exists.
//
// The engine is templated on the scalar. A double instance discovers a pivot
// path cheaply; the resulting basis is then certified in exact arithmetic
// (nonnegative basics, every reduced cost >= 0). If certification fails, the
// rational instance continues from that basis, or from scratch when the basis
// is unusable. No float value ever reaches the returned solution.
//
// Pivot rule (pinned -- this is the determinism contract): entering column
// with the most negative reduced cost in the float instance and by cyclic
// first-negative scan in the exact instance, both falling back to Bland's
// least-index rule while 25+ consecutive pivots have been degenerate; leaving
// row by minimum ratio, ties toward the smallest basis column id. An infinite
// exact pivot sequence would have an all-degenerate tail, which locks the
// rule to Bland's, and Bland's rule cannot cycle -- so the solve terminates.
// ---------------------------------------------------------------------------

namespace {

struct RowForm {
    std::size_t vars = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> cost;
};

std::vector<std::pair<std::size_t, Rational>> negated(
    const std::vector<std::pair<std::size_t, Rational>>& entries) {
    auto out = entries;
    for (auto& [v, a] : out) a = -a;
    return out;
}

RowForm build_row_form(const LpProblem& p) {
    RowForm f;
    f.vars = p.var_count();
    f.cost = p.objective();
    auto add = [&](std::vector<std::pair<std::size_t, Rational>> entries, Rational rhs) {
        f.rows.push_back(std::move(entries));
        f.rhs.push_back(std::move(rhs));
    };
    for (const auto& c : p.constraints()) {
        switch (c.sense) {
            case Sense::GreaterEqual: add(c.entries, c.rhs); break;
            case Sense::LessEqual: add(negated(c.entries), -c.rhs); break;
            case Sense::Equal:
                add(c.entries, c.rhs);
                add(negated(c.entries), -c.rhs);
                break;
        }
    }
    for (std::size_t v = 0; v < f.vars; ++v) {
        if (p.lower_bounds()[v]) add({{v, Rational(1)}}, *p.lower_bounds()[v]);
        if (p.upper_bounds()[v]) add({{v, Rational(-1)}}, -*p.upper_bounds()[v]);
    }
    return f;
}

template <class Num>
struct NumTraits;

template <>
struct NumTraits<Rational> {
    static constexpr bool exact = true;
    static bool neg(const Rational& x) { return x < 0; }
    static bool pos(const Rational& x) { return x > 0; }
    static bool zero(const Rational& x) { return x == 0; }
};

template <>
struct NumTraits<double> {
    static constexpr bool exact = false;
    static constexpr double eps = 1e-9;
    static bool neg(double x) { return x < -eps; }
    static bool pos(double x) { return x > eps; }
    static bool zero(double x) { return std::fabs(x) <= eps; }
};

template <class Num>
struct StandardForm {
    std::size_t v = 0;  // rows = primal variables
    std::size_t C = 0;  // real columns = primal constraints
    std::vector<std::vector<std::pair<std::size_t, Num>>> cols;
    std::vector<Num> e;     // rhs, >= 0 after row flips
    std::vector<Num> q;     // phase-2 cost per real column
    std::vector<int> sign;  // per row, the flip applied (+1/-1)
};

StandardForm<Rational> build_standard(const RowForm& f) {
    StandardForm<Rational> s;
    s.v = f.vars;
    s.C = f.rows.size();
    s.sign.assign(s.v, 1);
    s.e.resize(s.v);
    for (std::size_t i = 0; i < s.v; ++i) {
        s.sign[i] = f.cost[i] < 0 ? -1 : 1;
        s.e[i] = f.cost[i] < 0 ? Rational(-f.cost[i]) : f.cost[i];
    }
    s.cols.resize(s.C);
    for (std::size_t j = 0; j < s.C; ++j)
        for (const auto& [var, a] : f.rows[j])
            s.cols[j].emplace_back(var, s.sign[var] < 0 ? Rational(-a) : a);
    s.q.resize(s.C);
    for (std::size_t j = 0; j < s.C; ++j) s.q[j] = -f.rhs[j];
    return s;
}

StandardForm<double> to_double_form(const StandardForm<Rational>& s) {
    StandardForm<double> d;
    d.v = s.v;
    d.C = s.C;
    d.sign = s.sign;
    d.e.reserve(s.v);
    for (const auto& x : s.e) d.e.push_back(to_double(x));
    d.q.reserve(s.C);
    for (const auto& x : s.q) d.q.push_back(to_double(x));
    d.cols.resize(s.C);
    for (std::size_t j = 0; j < s.C; ++j)
        for (const auto& [var, a] : s.cols[j]) d.cols[j].emplace_back(var, to_double(a));
    return d;
}

// One factored basis: columns, B^-1 (row-major v x v), basic values B^-1 e.
template <class Num>
struct BasisState {
    std::vector<long> basis;
    std::vector<Num> binv;
    std::vector<Num> xb;
};

// Gauss-Jordan [B | I] -> [I | B^-1] with deterministic first-nonzero
// pivoting. Column ids >= C denote the artificial unit column of row id - C.
template <class Num>
std::optional<BasisState<Num>> factor_basis(const StandardForm<Num>& s,
                                            const std::vector<long>& basis) {
    const std::size_t v = s.v;
    if (basis.size() != v) return std::nullopt;
    std::vector<Num> b(v * v, Num(0)), inv(v * v, Num(0));
    for (std::size_t c = 0; c < v; ++c) {
        const long col = basis[c];
        if (col < 0 || col >= static_cast<long>(s.C + v)) return std::nullopt;
        if (col < static_cast<long>(s.C))
            for (const auto& [row, a] : s.cols[col]) b[row * v + c] = a;
        else
            b[(static_cast<std::size_t>(col) - s.C) * v + c] = Num(1);
        inv[c * v + c] = Num(1);
    }
    for (std::size_t c = 0; c < v; ++c) {
        std::size_t p = c;
        while (p < v && NumTraits<Num>::zero(b[p * v + c])) ++p;
        if (p == v) return std::nullopt;
        if (p != c)
            for (std::size_t k = 0; k < v; ++k) {
                std::swap(b[p * v + k], b[c * v + k]);
                std::swap(inv[p * v + k], inv[c * v + k]);
            }
        const Num d = b[c * v + c];
        for (std::size_t k = 0; k < v; ++k) {
            b[c * v + k] /= d;
            inv[c * v + k] /= d;
        }
        for (std::size_t i = 0; i < v; ++i) {
            if (i == c) continue;
            const Num f = b[i * v + c];
            if (NumTraits<Num>::zero(f)) continue;
            for (std::size_t k = 0; k < v; ++k) {
                b[i * v + k] -= f * b[c * v + k];
                inv[i * v + k] -= f * inv[c * v + k];
            }
        }
    }
    BasisState<Num> bs;
    bs.basis = basis;
    bs.binv = std::move(inv);
    bs.xb.assign(v, Num(0));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t k = 0; k < v; ++k) bs.xb[i] += bs.binv[i * v + k] * s.e[k];
    return bs;
}

constexpr int kBlandTrigger = 25;

template <class Num>
class Simplex {
public:
    enum class Outcome { Optimal, DualUnbounded, DualInfeasible, Stalled };

    explicit Simplex(const StandardForm<Num>& sf) : sf_(sf) {}

    // Two-phase run from the all-artificial basis.
    Outcome run() {
        const std::size_t v = sf_.v;
        state_.basis.resize(v);
        state_.binv.assign(v * v, Num(0));
        state_.xb = sf_.e;
        is_basic_.assign(sf_.C, 0);
        for (std::size_t r = 0; r < v; ++r) {
            state_.basis[r] = static_cast<long>(sf_.C + r);
            state_.binv[r * v + r] = Num(1);
        }
        phase_ = 1;
        const Outcome o = iterate();
        if (o != Outcome::Optimal) return o;
        Num art_total(0);
        for (std::size_t r = 0; r < v; ++r)
            if (state_.basis[r] >= static_cast<long>(sf_.C)) art_total += state_.xb[r];
        if (!NumTraits<Num>::zero(art_total)) return Outcome::DualInfeasible;
        drive_out_artificials();
        phase_ = 2;
        return iterate();
    }

    // Phase-2 run from an already-factored feasible basis.
    Outcome run_phase2_from(BasisState<Num> start) {
        state_ = std::move(start);
        is_basic_.assign(sf_.C, 0);
        for (long col : state_.basis)
            if (col < static_cast<long>(sf_.C)) is_basic_[col] = 1;
        drive_out_artificials();
        phase_ = 2;
        return iterate();
    }

    const BasisState<Num>& state() const { return state_; }

private:
    Num phase_cost(long col) const {
        if (phase_ == 1) return col >= static_cast<long>(sf_.C) ? Num(1) : Num(0);
        return col >= static_cast<long>(sf_.C) ? Num(0) : sf_.q[col];
    }

    std::vector<Num> multipliers() const {
        const std::size_t v = sf_.v;
        std::vector<Num> pi(v, Num(0));
        for (std::size_t r = 0; r < v; ++r) {
            const Num qb = phase_cost(state_.basis[r]);
            if (NumTraits<Num>::zero(qb)) continue;
            for (std::size_t i = 0; i < v; ++i) pi[i] += qb * state_.binv[r * v + i];
        }
        return pi;
    }

    Num reduced_cost(const std::vector<Num>& pi, std::size_t j) const {
        Num rc = phase_ == 2 ? sf_.q[j] : Num(0);
        for (const auto& [row, a] : sf_.cols[j]) rc -= pi[row] * a;
        return rc;
    }

    std::vector<Num> tableau_column(std::size_t j) const {
        const std::size_t v = sf_.v;
        std::vector<Num> u(v, Num(0));
        for (const auto& [row, a] : sf_.cols[j])
            for (std::size_t i = 0; i < v; ++i) u[i] += state_.binv[i * v + row] * a;
        return u;
    }

    void pivot(std::size_t r, long enter, const std::vector<Num>& u) {
        const std::size_t v = sf_.v;
        const Num ur = u[r];
        for (std::size_t c = 0; c < v; ++c) state_.binv[r * v + c] /= ur;
        state_.xb[r] /= ur;
        for (std::size_t i = 0; i < v; ++i) {
            if (i == r || NumTraits<Num>::zero(u[i])) continue;
            const Num f = u[i];
            for (std::size_t c = 0; c < v; ++c)
                state_.binv[i * v + c] -= f * state_.binv[r * v + c];
            state_.xb[i] -= f * state_.xb[r];
            if constexpr (!NumTraits<Num>::exact) {
                if (state_.xb[i] < 0 && state_.xb[i] > -NumTraits<double>::eps)
                    state_.xb[i] = 0;  // keep float feasibility from drifting
            }
        }
        if (state_.basis[r] < static_cast<long>(sf_.C)) is_basic_[state_.basis[r]] = 0;
        state_.basis[r] = enter;
        is_basic_[enter] = 1;
    }

    // Pivot zero-valued artificials out wherever a real column can replace
    // them (a degenerate pivot, so feasibility is untouched). A row admitting
    // no replacement is a linear dependency among the standard-form rows; its
    // tableau row stays orthogonal to every real column forever, so the
    // artificial sits inert at zero and never corrupts the solve.
    void drive_out_artificials() {
        const std::size_t v = sf_.v;
        for (std::size_t r = 0; r < v; ++r) {
            if (state_.basis[r] < static_cast<long>(sf_.C)) continue;
            if (!NumTraits<Num>::zero(state_.xb[r])) continue;
            for (std::size_t j = 0; j < sf_.C; ++j) {
                if (is_basic_[j]) continue;
                Num t(0);
                for (const auto& [row, a] : sf_.cols[j]) t += state_.binv[r * v + row] * a;
                if (NumTraits<Num>::zero(t)) continue;
                pivot(r, static_cast<long>(j), tableau_column(j));
                break;
            }
        }
    }

    Outcome iterate() {
        const std::size_t v = sf_.v;
        long iterations = 0;
        // The exact instance terminates by the pivot rule; the float instance
        // is only a presolve, so cap it rather than trusting epsilons forever.
        const long cap = NumTraits<Num>::exact
                             ? std::numeric_limits<long>::max()
                             : 200 + 20 * static_cast<long>(v + sf_.C);
        while (true) {
            if (++iterations > cap) return Outcome::Stalled;
            const auto pi = multipliers();
            long enter = -1;
            if (degen_run_ >= kBlandTrigger) {  // Bland: least index, first negative
                for (std::size_t j = 0; j < sf_.C; ++j) {
                    if (is_basic_[j]) continue;
                    if (NumTraits<Num>::neg(reduced_cost(pi, j))) {
                        enter = static_cast<long>(j);
                        break;
                    }
                }
            } else if constexpr (!NumTraits<Num>::exact) {  // Dantzig: most negative
                Num best(0);
                for (std::size_t j = 0; j < sf_.C; ++j) {
                    if (is_basic_[j]) continue;
                    const Num rc = reduced_cost(pi, j);
                    if (NumTraits<Num>::neg(rc) && rc < best) {  // ties keep lower j
                        best = rc;
                        enter = static_cast<long>(j);
                    }
                }
            } else {  // cyclic first-negative, cheap under exact arithmetic
                for (std::size_t step = 0; step < sf_.C; ++step) {
                    const std::size_t j =
                        (static_cast<std::size_t>(last_enter_ + 1) + step) % sf_.C;
                    if (is_basic_[j]) continue;
                    if (NumTraits<Num>::neg(reduced_cost(pi, j))) {
                        enter = static_cast<long>(j);
                        break;
                    }
                }
            }
            if (enter < 0) return Outcome::Optimal;

            const auto u = tableau_column(static_cast<std::size_t>(enter));
            long leave = -1;
            Num best_ratio(0);
            for (std::size_t i = 0; i < v; ++i) {
                if (!NumTraits<Num>::pos(u[i])) continue;
                Num ratio = state_.xb[i] / u[i];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && state_.basis[i] < state_.basis[leave])) {
                    leave = static_cast<long>(i);
                    best_ratio = std::move(ratio);
                }
            }
            if (leave < 0) {
                if (phase_ == 1) {
                    // Phase 1 is bounded below by zero; a ray here means the
                    // arithmetic broke, which only the float instance can do.
                    if constexpr (NumTraits<Num>::exact)
                        throw SolverInvariantError("phase-1 unbounded ray");
                    return Outcome::Stalled;
                }
                return Outcome::DualUnbounded;
            }
            degen_run_ =
                NumTraits<Num>::zero(state_.xb[static_cast<std::size_t>(leave)])
                    ? degen_run_ + 1
                    : 0;
            pivot(static_cast<std::size_t>(leave), enter, u);
            last_enter_ = enter;
        }
    }

    const StandardForm<Num>& sf_;
    BasisState<Num> state_;
    std::vector<char> is_basic_;
    int phase_ = 1;
    long last_enter_ = -1;
    int degen_run_ = 0;
};

std::vector<Rational> phase2_multipliers(const StandardForm<Rational>& s,
                                         const BasisState<Rational>& bs) {
    const std::size_t v = s.v;
    std::vector<Rational> pi(v, Rational(0));
    for (std::size_t r = 0; r < v; ++r) {
        const long col = bs.basis[r];
        if (col >= static_cast<long>(s.C)) continue;  // artificial: cost 0
        const Rational& qb = s.q[col];
        if (qb == 0) continue;
        for (std::size_t i = 0; i < v; ++i) pi[i] += qb * bs.binv[r * v + i];
    }
    return pi;
}

// w >= 0 and no artificial carrying a nonzero value.
bool basis_feasible(const StandardForm<Rational>& s, const BasisState<Rational>& bs) {
    for (std::size_t r = 0; r < s.v; ++r) {
        if (bs.xb[r] < 0) return false;
        if (bs.basis[r] >= static_cast<long>(s.C) && bs.xb[r] != 0) return false;
    }
    return true;
}

bool reduced_costs_nonnegative(const StandardForm<Rational>& s,
                               const std::vector<Rational>& pi) {
    for (std::size_t j = 0; j < s.C; ++j) {
        Rational rc = s.q[j];
        for (const auto& [row, a] : s.cols[j]) rc -= pi[row] * a;
        if (rc < 0) return false;
    }
    return true;
}

// Primal vertex and objective from an optimal basis. Every primal constraint
// is re-checked exactly (the reduced cost of column j equals a_j.z - b_j, so
// this is also the dual-optimality certificate), and strong duality is
// asserted; failures indicate solver bugs, never input problems.
LpSolution extract_solution(const RowForm& f, const StandardForm<Rational>& s,
                            const BasisState<Rational>& bs) {
    if (!basis_feasible(s, bs))
        throw SolverInvariantError("returned basis is not feasible");
    const std::size_t v = s.v;
    const auto pi = phase2_multipliers(s, bs);
    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.primal.resize(v);
    for (std::size_t i = 0; i < v; ++i)
        sol.primal[i] = s.sign[i] < 0 ? pi[i] : Rational(-pi[i]);
    for (std::size_t j = 0; j < f.rows.size(); ++j) {
        Rational lhs(0);
        for (const auto& [var, a] : f.rows[j]) lhs += a * sol.primal[var];
        if (lhs < f.rhs[j])
            throw SolverInvariantError("solution violates constraint " + std::to_string(j));
    }
    sol.objective = 0;
    for (std::size_t i = 0; i < v; ++i) sol.objective += f.cost[i] * sol.primal[i];
    Rational dual_obj(0);
    for (std::size_t r = 0; r < v; ++r) {
        const long col = bs.basis[r];
        if (col < static_cast<long>(s.C)) dual_obj += s.q[col] * bs.xb[r];
    }
    if (sol.objective != -dual_obj)
        throw SolverInvariantError("strong duality violated by returned basis");
    return sol;
}

LpSolution solve_row_form(const RowForm& f, bool allow_probe);

// Infeasible/unbounded split once the dual is known infeasible: minimize the
// violation slack t over Az + t1 >= b, t >= 0. t* = 0 iff the primal is
// feasible (hence unbounded).
bool primal_is_feasible(const RowForm& f) {
    RowForm aux;
    aux.vars = f.vars + 1;
    aux.cost.assign(aux.vars, Rational(0));
    aux.cost[f.vars] = 1;
    aux.rows = f.rows;
    for (auto& row : aux.rows) row.emplace_back(f.vars, Rational(1));
    aux.rhs = f.rhs;
    aux.rows.push_back({{f.vars, Rational(1)}});
    aux.rhs.push_back(Rational(0));
    const LpSolution s = solve_row_form(aux, /*allow_probe=*/false);
    if (s.status != LpStatus::Optimal)
        throw SolverInvariantError("feasibility probe LP must be solvable");
    return s.objective == 0;
}

LpSolution solve_row_form(const RowForm& f, bool allow_probe) {
    const StandardForm<Rational> sx = build_standard(f);

    // Float presolve: discover a pivot path cheaply.
    std::optional<std::vector<long>> candidate;
    {
        const StandardForm<double> sd = to_double_form(sx);
        Simplex<double> fast(sd);
        if (fast.run() == Simplex<double>::Outcome::Optimal) candidate = fast.state().basis;
    }

    if (candidate) {
        if (auto bs = factor_basis(sx, *candidate)) {
            if (basis_feasible(sx, *bs) &&
                reduced_costs_nonnegative(sx, phase2_multipliers(sx, *bs)))
                return extract_solution(f, sx, *bs);  // certified optimal as-is
            if (basis_feasible(sx, *bs)) {
                // Certifiably feasible but not optimal: finish exactly from here.
                Simplex<Rational> warm(sx);
                const auto o = warm.run_phase2_from(std::move(*bs));
                if (o == Simplex<Rational>::Outcome::Optimal)
                    return extract_solution(f, sx, warm.state());
                if (o == Simplex<Rational>::Outcome::DualUnbounded)
                    return {LpStatus::Infeasible, {}, Rational(0)};
            }
        }
        // Singular or infeasible candidate: cold exact solve below.
    }

    Simplex<Rational> exact(sx);
    switch (exact.run()) {
        case Simplex<Rational>::Outcome::Optimal:
            return extract_solution(f, sx, exact.state());
        case Simplex<Rational>::Outcome::DualUnbounded:
            return {LpStatus::Infeasible, {}, Rational(0)};
        case Simplex<Rational>::Outcome::DualInfeasible:
            if (!allow_probe)
                throw SolverInvariantError("feasibility probe hit an infeasible dual");
            return primal_is_feasible(f)
                       ? LpSolution{LpStatus::Unbounded, {}, Rational(0)}
                       : LpSolution{LpStatus::Infeasible, {}, Rational(0)};
        default:
            throw SolverInvariantError("exact simplex cannot stall");
    }
}

}  // namespace

LpSolution lp_solve(const LpProblem& problem) {
    return solve_row_form(build_row_form(problem), /*allow_probe=*/true);
}

}  // namespace tropfw
