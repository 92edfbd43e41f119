#pragma once

#include <vector>

#include "jensen/errors.hpp"

namespace jensen::lp {

enum class RowSense { LessEqual, Equal, GreaterEqual };
enum class VarDomain { NonNegative, Free };
enum class ObjSense { Minimize, Maximize };
enum class SolveStatus { Optimal, Infeasible, Unbounded };

// Dense LP in row form.  Rows are constraints, senses per row, domains per variable.
struct LinearProgram {
  ObjSense sense = ObjSense::Minimize;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<RowSense> senses;
  std::vector<VarDomain> domains;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  void validate() const;
};

struct SolverOptions {
  double pivot_tol = 1e-9;
  long max_iterations = 0;  // 0 derives a cap from the problem size
};

struct CertificateResiduals {
  double primal_feasibility = 0;
  double dual_feasibility = 0;
  double duality_gap = 0;
};

struct LpSolution {
  SolveStatus status = SolveStatus::Optimal;
  double value = 0;
  std::vector<double> primal;  // per original variable
  std::vector<double> dual;    // per row; sign conventions follow the objective sense
  CertificateResiduals residuals;
  long iterations = 0;
};

// Two-phase dense tableau simplex with Bland's rule.  Deterministic: identical
// inputs give identical pivot sequences and bit-identical output.
LpSolution solve(const LinearProgram& lp, const SolverOptions& opts);
inline LpSolution solve(const LinearProgram& lp) { return solve(lp, SolverOptions{}); }

// Recomputes all certificate residuals from scratch against the original data.
// Never throws on mismatch; callers decide what to do with the numbers.
CertificateResiduals verify_certificates(const LinearProgram& lp, const LpSolution& sol);

}
