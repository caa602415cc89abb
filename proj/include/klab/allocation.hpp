#pragma once

#include <limits>
#include <vector>

#include "klab/errors.hpp"

namespace klab {

// Monotone per-request cost vector h(0..k); a prefix of entries may be
// infinite (never a large float). h(j) = cost of serving with exactly j
// servers at the requested location.
struct CostVector {
  int loc = 0;
  std::vector<double> h;  // size k+1; entries with index < inf_prefix are infinite
  int inf_prefix = 0;

  bool is_inf(int j) const { return j < inf_prefix; }
  void validate(int k) const;
};

struct LambdaVector {
  int loc = 0;
  std::vector<double> lam;  // lam[jj] is the marginal cost of having <= jj servers, jj = 0..k-1
  int inf_prefix = 0;       // lam[0..inf_prefix) infinite
};

// lam[jj] = h(jj) - h(jj+1); infinite whenever h(jj) is infinite.
LambdaVector lambda_from_cost_vector(const CostVector& h, int k);

struct StepCosts {
  double hit = 0;           // continuous hit charge
  double movement = 0;      // continuous movement charge (growth terms)
  double fix_movement = 0;  // portion charged during the fix stage
  int event_count = 0;
};

// Per-serve diagnostics consumed by the step-inequality checker and audits.
struct StepTrace {
  StepCosts costs;
  int loc = -1;
  double kappa_prev = 0, kappa = 0;
  std::vector<double> lambda;             // finite entries (0 where infinite)
  std::vector<char> lambda_inf;
  std::vector<double> lambda_eta_integral;  // per jj at loc
  double hit_end = 0;        // lambda . y at the end state (finite part)
  double movement_abs = 0;   // sum_i w_i sum_j |y^t - y^{t-1}|
  double movement_inc = 0;   // sum_i w_i sum_j max(y^t - y^{t-1}, 0)
  double prephase_movement = 0;
  double max_clamp = 0;
  int merges = 0;
  // invariant violation counters (criterion: all zero)
  int viol_bounds = 0, viol_monotone = 0, viol_volume = 0, viol_n_monotone = 0, viol_blocks = 0;
};

struct AllocState {
  int d = 0, k = 0;
  std::vector<double> w;
  double eps = 1, beta = 0, alpha = 0;
  // y[i][jj] = probability of having fewer than jj+1 servers at location i
  std::vector<std::vector<double>> y;
  // block partition of {0..k-1} at the last requested location, as half-open runs
  std::vector<std::pair<int, int>> blocks;
  int last_loc = -1;
  double kappa = 0;  // quota of the last completed step

  double volume() const;           // sum of all y
  double deployed() const;         // k*d - volume()
  std::vector<std::vector<double>> to_x() const;  // per-location distributions over {0..k}
};

struct AllocParams {
  double bound_tol = 1e-12;    // snap distance to {0,1}
  double rk_tol = 1e-10;       // per-substep error control
  double event_tol = 1e-14;    // trigger localization
  int event_budget_factor = 64;
};

// x0: per-location distributions over server counts {0..k}.
AllocState init_state(const std::vector<double>& w, int k, double eps,
                      const std::vector<std::vector<double>>& x0);

// Raises every y < 1 at rate (y+beta)/w_i until the volume reaches k*d - kappa.
// Returns the movement charge; no-op when the volume is already sufficient.
double fix_stage(AllocState& s, double kappa, const AllocParams& p = {});

// Finite-lambda reaction over eta in [0,1] with event-driven integration.
// Requires the volume invariant to hold on entry.
StepTrace hit_stage(AllocState& s, const LambdaVector& lam, double kappa,
                    const AllocParams& p = {});

// fix stage, then the infinite-lambda pre-phase, then the hit stage.
StepTrace serve(AllocState& s, const CostVector& h, double kappa, const AllocParams& p = {});

std::vector<std::vector<double>> state_to_distributions(const AllocState& s);

// opt_y integral: opt_y[i][jj] in {0,1}
double potential_phi_m(const AllocState& s, const std::vector<std::vector<double>>& opt_y);
double potential_phi_h(const AllocState& s);

// One completed run of the online dynamics plus everything the checker needs.
struct AllocRun {
  std::vector<double> w;
  int d = 0, k = 0;
  double eps = 0, beta = 0, alpha = 0;
  std::vector<std::vector<std::vector<double>>> y_states;  // T+1 snapshots
  std::vector<StepTrace> traces;                           // T entries
  std::vector<double> kappas;                              // T+1, kappas[0] = initial
};

struct OptTrajectory {
  // integral y* snapshots, T+1 entries, same shape as the online state
  std::vector<std::vector<std::vector<double>>> y_states;
  std::vector<double> hit_costs;  // per step, finite part (lambda . y*)
  std::vector<double> mov_costs;  // per step, |delta y*| ledger
  double total = 0;               // hit + movement
};

struct StepSlack {
  double ineq_move = 0;    // slack of the movement-side potential inequality
  double ineq_hit = 0;     // slack of the hit-side potential inequality
  double charge_opt = 0;   // lambda . y*  -  integral lambda^eta . y*
  double charge_on = 0;    // integral lambda^eta . y^eta  -  lambda . y^t
};

struct InequalityReport {
  std::vector<StepSlack> steps;
  double min_slack = std::numeric_limits<double>::infinity();
  int violations = 0;           // slacks below -tolerance
  double movement_identity_gap = 0;  // |Delta|-ledger accounting identity residual
};

InequalityReport check_step_inequalities(const AllocRun& run, const OptTrajectory& opt,
                                         double tolerance);

}  // namespace klab
