#include "jensen/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace jensen::lp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite(double v) { return std::isfinite(v); }

// Internal standard form: minimize chat.xi  s.t.  Ahat.xi = bhat, xi >= 0, bhat >= 0.
// Column layout: structural (positive parts, then negative parts of free vars),
// then slack/surplus columns, then one probe artificial per row.  Probe artificials
// exist so every row has a unit column for dual extraction; the ones that are not
// part of the initial basis carry no cost and are barred from ever entering.
struct Standardizer {
  int n_orig = 0, m = 0;
  int n_struct = 0;          // structural columns after splitting
  int ncols = 0;             // total columns
  double sense_factor = 1;   // +1 minimize, -1 maximize
  std::vector<int> pos_col, neg_col;   // per original variable
  std::vector<int> slack_col;          // per row, -1 if none
  std::vector<int> art_col;            // per row, always present
  std::vector<double> flip;            // per row, +1 or -1
  std::vector<RowSense> eff_sense;     // post-flip sense
  std::vector<double> cost;            // chat per column
  std::vector<char> phase1_costed;     // per column
  std::vector<char> barred;            // per column, never enters
};

struct Tableau {
  int m = 0, w = 0;  // rows, row width (ncols + 1)
  std::vector<double> a;
  std::vector<int> basis;
  std::vector<char> active;

  double* row(int i) { return a.data() + static_cast<size_t>(i) * w; }
  const double* row(int i) const { return a.data() + static_cast<size_t>(i) * w; }
};

Standardizer standardize(const LinearProgram& lp) {
  Standardizer s;
  s.n_orig = lp.num_vars();
  s.m = lp.num_rows();
  s.sense_factor = lp.sense == ObjSense::Maximize ? -1.0 : 1.0;

  s.pos_col.assign(s.n_orig, -1);
  s.neg_col.assign(s.n_orig, -1);
  int col = 0;
  for (int j = 0; j < s.n_orig; ++j) s.pos_col[j] = col++;
  for (int j = 0; j < s.n_orig; ++j)
    if (lp.domains[j] == VarDomain::Free) s.neg_col[j] = col++;
  s.n_struct = col;

  s.flip.assign(s.m, 1.0);
  s.eff_sense.assign(s.m, RowSense::Equal);
  s.slack_col.assign(s.m, -1);
  s.art_col.assign(s.m, -1);
  for (int i = 0; i < s.m; ++i) {
    RowSense sen = lp.senses[i];
    double b = lp.rhs[i];
    bool do_flip = false;
    // Normalize to bhat >= 0; with b == 0 prefer the slack-friendly form.
    if (sen == RowSense::LessEqual && b < 0) do_flip = true;
    if (sen == RowSense::GreaterEqual && b <= 0) do_flip = true;
    if (sen == RowSense::Equal && b < 0) do_flip = true;
    if (do_flip) {
      s.flip[i] = -1.0;
      if (sen == RowSense::LessEqual) sen = RowSense::GreaterEqual;
      else if (sen == RowSense::GreaterEqual) sen = RowSense::LessEqual;
    }
    s.eff_sense[i] = sen;
    if (sen != RowSense::Equal) s.slack_col[i] = col++;
  }
  for (int i = 0; i < s.m; ++i) s.art_col[i] = col++;
  s.ncols = col;

  s.cost.assign(s.ncols, 0.0);
  for (int j = 0; j < s.n_orig; ++j) {
    double c = s.sense_factor * lp.objective[j];
    s.cost[s.pos_col[j]] = c;
    if (s.neg_col[j] >= 0) s.cost[s.neg_col[j]] = -c;
  }
  s.phase1_costed.assign(s.ncols, 0);
  s.barred.assign(s.ncols, 0);
  return s;
}

Tableau build_tableau(const LinearProgram& lp, const Standardizer& s) {
  Tableau t;
  t.m = s.m;
  t.w = s.ncols + 1;
  t.a.assign(static_cast<size_t>(s.m) * t.w, 0.0);
  t.basis.assign(s.m, -1);
  t.active.assign(s.m, 1);

  for (int i = 0; i < s.m; ++i) {
    double* r = t.row(i);
    const auto& src = lp.rows[i];
    for (int j = 0; j < s.n_orig; ++j) {
      double v = s.flip[i] * src[j];
      if (v == 0.0) continue;
      r[s.pos_col[j]] = v;
      if (s.neg_col[j] >= 0) r[s.neg_col[j]] = -v;
    }
    if (s.slack_col[i] >= 0)
      r[s.slack_col[i]] = s.eff_sense[i] == RowSense::LessEqual ? 1.0 : -1.0;
    r[s.art_col[i]] = 1.0;
    r[s.ncols] = s.flip[i] * lp.rhs[i];
  }
  return t;
}

// Initial basis: slack for <= rows, then singleton positive structural columns,
// artificial otherwise.  Only the artificials that end up basic get phase-1 cost.
void choose_basis(const LinearProgram&, Standardizer& s, Tableau& t) {
  std::vector<int> col_rowcount(s.ncols, 0), col_lastrow(s.ncols, -1);
  for (int i = 0; i < s.m; ++i) {
    const double* r = t.row(i);
    for (int j = 0; j < s.n_struct; ++j)
      if (r[j] != 0.0) { ++col_rowcount[j]; col_lastrow[j] = i; }
  }
  std::vector<char> used(s.ncols, 0);
  for (int i = 0; i < s.m; ++i) {
    if (s.slack_col[i] >= 0 && s.eff_sense[i] == RowSense::LessEqual) {
      t.basis[i] = s.slack_col[i];
      continue;
    }
    int pick = -1;
    for (int j = 0; j < s.n_struct; ++j) {
      if (used[j] || col_rowcount[j] != 1 || col_lastrow[j] != i) continue;
      if (t.row(i)[j] > 0.0) { pick = j; break; }
    }
    if (pick >= 0) {
      used[pick] = 1;
      t.basis[i] = pick;
      double piv = t.row(i)[pick];
      double* r = t.row(i);
      for (int j = 0; j <= s.ncols; ++j) r[j] /= piv;
    } else {
      t.basis[i] = s.art_col[i];
      s.phase1_costed[s.art_col[i]] = 1;
    }
  }
  for (int i = 0; i < s.m; ++i) {
    int a = s.art_col[i];
    s.barred[a] = 1;  // artificials never (re-)enter
  }
}

void price_objective(const Standardizer& s, const Tableau& t,
                     const std::vector<double>& cost, std::vector<double>& obj) {
  obj.assign(s.ncols + 1, 0.0);
  for (int j = 0; j < s.ncols; ++j) obj[j] = cost[j];
  for (int i = 0; i < t.m; ++i) {
    if (!t.active[i]) continue;
    double cb = cost[t.basis[i]];
    if (cb == 0.0) continue;
    const double* r = t.row(i);
    for (int j = 0; j <= s.ncols; ++j) obj[j] -= cb * r[j];
  }
}

void pivot(Tableau& t, std::vector<double>& obj, int ncols, int pr, int pc) {
  double* prow = t.row(pr);
  double piv = prow[pc];
  for (int j = 0; j <= ncols; ++j) prow[j] /= piv;
  prow[pc] = 1.0;
  for (int i = 0; i < t.m; ++i) {
    if (i == pr) continue;
    double* r = t.row(i);
    double f = r[pc];
    if (f == 0.0) continue;
    for (int j = 0; j <= ncols; ++j) r[j] -= f * prow[j];
    r[pc] = 0.0;
  }
  double f = obj[pc];
  if (f != 0.0) {
    for (int j = 0; j <= ncols; ++j) obj[j] -= f * prow[j];
    obj[pc] = 0.0;
  }
  t.basis[pr] = pc;
}

// Bland: entering = smallest eligible index; leaving = min ratio, ties by
// smallest basis variable.  Returns false when no entering column remains.
enum class StepResult { Optimal, Stepped, Unbounded };

StepResult simplex_step(const Standardizer& s, Tableau& t, std::vector<double>& obj,
                        double tol) {
  int pc = -1;
  for (int j = 0; j < s.ncols; ++j) {
    if (s.barred[j]) continue;
    if (obj[j] < -tol) { pc = j; break; }
  }
  if (pc < 0) return StepResult::Optimal;

  int pr = -1;
  double best = kInf;
  for (int i = 0; i < t.m; ++i) {
    if (!t.active[i]) continue;
    const double* r = t.row(i);
    if (r[pc] <= tol) continue;
    double ratio = r[s.ncols] / r[pc];
    if (ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 &&
                                 (pr < 0 || t.basis[i] < t.basis[pr]))) {
      best = ratio;
      pr = i;
    }
  }
  if (pr < 0) return StepResult::Unbounded;
  pivot(t, obj, s.ncols, pr, pc);
  return StepResult::Stepped;
}

}  // namespace

void LinearProgram::validate() const {
  const size_t n = objective.size(), m = rows.size();
  if (rhs.size() != m || senses.size() != m)
    throw ValidationError("lp: rhs/senses size mismatch with rows");
  if (domains.size() != n)
    throw ValidationError("lp: domains size mismatch with objective");
  for (size_t i = 0; i < m; ++i)
    if (rows[i].size() != n)
      throw ValidationError("lp: row " + std::to_string(i) + " width mismatch");
  for (double c : objective)
    if (!finite(c)) throw ValidationError("lp: non-finite objective coefficient");
  for (double b : rhs)
    if (!finite(b)) throw ValidationError("lp: non-finite rhs");
  for (const auto& r : rows)
    for (double v : r)
      if (!finite(v)) throw ValidationError("lp: non-finite matrix entry");
}

LpSolution solve(const LinearProgram& lp, const SolverOptions& opts) {
  lp.validate();
  const double tol = opts.pivot_tol;
  Standardizer s = standardize(lp);
  Tableau t = build_tableau(lp, s);
  choose_basis(lp, s, t);

  long cap = opts.max_iterations > 0
                 ? opts.max_iterations
                 : 200 + 100L * (static_cast<long>(s.m) + s.ncols);
  long iters = 0;

  LpSolution sol;

  bool need_phase1 = false;
  for (int i = 0; i < s.m; ++i)
    if (s.phase1_costed[t.basis[i]]) { need_phase1 = true; break; }

  std::vector<double> obj;
  if (need_phase1) {
    std::vector<double> c1(s.ncols, 0.0);
    for (int j = 0; j < s.ncols; ++j)
      if (s.phase1_costed[j]) c1[j] = 1.0;
    price_objective(s, t, c1, obj);
    while (true) {
      if (++iters > cap) throw SolverError("lp: phase-1 iteration cap exceeded");
      StepResult r = simplex_step(s, t, obj, tol);
      if (r == StepResult::Optimal) break;
      if (r == StepResult::Unbounded)
        throw SolverError("lp: phase-1 unbounded (internal)");
    }
    double scale = 1.0;
    for (double b : lp.rhs) scale = std::max(scale, std::abs(b));
    double p1 = -obj[s.ncols];
    if (p1 > 1e-7 * scale) {
      sol.status = SolveStatus::Infeasible;
      sol.value = lp.sense == ObjSense::Maximize ? -kInf : kInf;
      sol.iterations = iters;
      return sol;
    }
    // Degenerately pivot leftover artificials out; rows that admit no pivot are
    // redundant and get frozen.
    const int first_art = s.ncols - s.m;
    for (int i = 0; i < s.m; ++i) {
      if (!t.active[i] || !s.phase1_costed[t.basis[i]]) continue;
      if (std::abs(t.row(i)[s.ncols]) <= 1e-7) t.row(i)[s.ncols] = 0.0;
      int pc = -1;
      for (int j = 0; j < first_art; ++j) {
        if (s.barred[j]) continue;
        if (std::abs(t.row(i)[j]) > tol) { pc = j; break; }
      }
      if (pc >= 0) {
        pivot(t, obj, s.ncols, i, pc);
      } else {
        double* r = t.row(i);
        int own = t.basis[i];
        for (int j = 0; j <= s.ncols; ++j) r[j] = 0.0;
        r[own] = 1.0;
      }
    }
  }

  price_objective(s, t, s.cost, obj);
  while (true) {
    if (++iters > cap) throw SolverError("lp: phase-2 iteration cap exceeded");
    StepResult r = simplex_step(s, t, obj, tol);
    if (r == StepResult::Optimal) break;
    if (r == StepResult::Unbounded) {
      sol.status = SolveStatus::Unbounded;
      sol.value = lp.sense == ObjSense::Maximize ? kInf : -kInf;
      sol.iterations = iters;
      return sol;
    }
  }

  std::vector<double> xi(s.ncols, 0.0);
  for (int i = 0; i < s.m; ++i)
    if (t.active[i]) xi[t.basis[i]] = t.row(i)[s.ncols];

  sol.primal.assign(s.n_orig, 0.0);
  for (int j = 0; j < s.n_orig; ++j) {
    double v = xi[s.pos_col[j]];
    if (s.neg_col[j] >= 0) v -= xi[s.neg_col[j]];
    sol.primal[j] = v;
  }
  double value = 0;
  for (int j = 0; j < s.n_orig; ++j) value += lp.objective[j] * sol.primal[j];
  sol.value = value;

  // Duals read off the probe artificial columns: reduced cost there is -yhat_i.
  sol.dual.assign(s.m, 0.0);
  for (int i = 0; i < s.m; ++i) {
    double yhat = -obj[s.art_col[i]];
    sol.dual[i] = s.flip[i] * yhat;
  }
  // External max conventions negate once more (internal problem minimized -c).
  if (lp.sense == ObjSense::Maximize)
    for (double& y : sol.dual) y = -y;

  sol.iterations = iters;
  sol.status = SolveStatus::Optimal;
  sol.residuals = verify_certificates(lp, sol);
  return sol;
}

CertificateResiduals verify_certificates(const LinearProgram& lp, const LpSolution& sol) {
  CertificateResiduals res;
  const int n = lp.num_vars(), m = lp.num_rows();
  if (static_cast<int>(sol.primal.size()) != n || static_cast<int>(sol.dual.size()) != m)
    return {kInf, kInf, kInf};

  double pf = 0;
  for (int i = 0; i < m; ++i) {
    double ax = 0;
    for (int j = 0; j < n; ++j) ax += lp.rows[i][j] * sol.primal[j];
    double d = ax - lp.rhs[i];
    switch (lp.senses[i]) {
      case RowSense::LessEqual: pf = std::max(pf, d); break;
      case RowSense::GreaterEqual: pf = std::max(pf, -d); break;
      case RowSense::Equal: pf = std::max(pf, std::abs(d)); break;
    }
  }
  for (int j = 0; j < n; ++j)
    if (lp.domains[j] == VarDomain::NonNegative)
      pf = std::max(pf, -sol.primal[j]);
  res.primal_feasibility = std::max(0.0, pf);

  // Reduced costs r_j = c_j - (A^T y)_j.  Minimize: need r_j >= 0 on x >= 0,
  // r_j = 0 on free vars, y <= 0 on <= rows, y >= 0 on >= rows.  Maximize mirrors.
  double df = 0;
  const bool maximize = lp.sense == ObjSense::Maximize;
  for (int j = 0; j < n; ++j) {
    double aty = 0;
    for (int i = 0; i < m; ++i) aty += lp.rows[i][j] * sol.dual[i];
    double r = lp.objective[j] - aty;
    if (lp.domains[j] == VarDomain::Free) df = std::max(df, std::abs(r));
    else df = std::max(df, maximize ? r : -r);
  }
  for (int i = 0; i < m; ++i) {
    double y = sol.dual[i];
    switch (lp.senses[i]) {
      case RowSense::LessEqual: df = std::max(df, maximize ? -y : y); break;
      case RowSense::GreaterEqual: df = std::max(df, maximize ? y : -y); break;
      case RowSense::Equal: break;
    }
  }
  res.dual_feasibility = std::max(0.0, df);

  double by = 0;
  for (int i = 0; i < m; ++i) by += lp.rhs[i] * sol.dual[i];
  double cx = 0;
  for (int j = 0; j < n; ++j) cx += lp.objective[j] * sol.primal[j];
  res.duality_gap = std::abs(cx - by);
  return res;
}

}
