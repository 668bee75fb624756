#pragma once

#include "dkdv/diffpoly.hpp"
#include "dkdv/evenop.hpp"
#include "dkdv/linsolve.hpp"
#include "dkdv/report.hpp"
#include "dkdv/shiftop.hpp"

#include <optional>
#include <utility>

namespace dkdv {

/// Lambda^2 + ((v + Lambda v)/2) Lambda + u over the (u,v) chart.
ShiftOp lax_operator(int trunc);

/// d-th flow of the Lax equation dL/dtau_d = (i eps)^{-1} 2^d/(2d+1)!! [L^{d+1/2}_+, L].
/// The u-equation is asserted to vanish; the v-equation is recovered by
/// solving (1+Lambda) x = 2c on the Lambda^1 coefficient and is asserted
/// real, even in eps, and a total x-derivative of an odeg-(2d+2) potential.
Flow dkdv_flow(int d, int E);

/// Seed constants of the hierarchy tails:
/// potential of dv/dtau_d at eps=0, u=0 is tail * v^{2d+2}.
Rational dkdv_tail_constant(int d);      // 1/((-4)^{d+1} (d+1)!)
Rational extended_tail_constant(int d);  // 1/((-2)^d (2d+1)!!)

/// The compatibility data of the (u,w)-chart pair of flows.
struct QCB {
    DiffPoly Q, C, B, Btilde;
};
QCB build_qcb(int E);

/// Potential of the t^1_1 flow in the (u,v) chart (the closed-form display).
DiffPoly extended_first_flow_potential(int E);

/// The pair (t^2_0, t^1_1) over (u,v); the two flows commute.
std::pair<Flow, Flow> topological_flows(int E);

struct ReconstructionCert {
    int unknowns = 0;
    int equations = 0;
    int kernel_dim = 0;
};

/// Solves for the potential P(u,w) of the extra flow with flow index d
/// (odeg 2d+1) by requiring commutativity with du/dt = 0, dw/dt = dx Q + u_x.
/// Seed: P at eps=0, u=0 equals C0 w^{2d+1}. The linear system is solved
/// exactly; existence and uniqueness (zero kernel) are asserted.
DiffPoly reconstruct_extended_flow(const DiffPoly &Q, int d, const Rational &C0, int E,
                                   ReconstructionCert *cert = nullptr);

/// t^1_d flow in the (u,v) chart; d = 0 is the translation flow, d >= 1 runs
/// the reconstruction solver in the (u,w) chart and transports back.
Flow extended_flow(int d, int E);

/// Linear change of dependent variables: old variable -> even operator
/// applied to a new variable. All operators must have unit constant term.
struct MiuraMap {
    RingPtr from, to;
    std::vector<std::pair<EvenOp, int>> image; // per old variable

    MiuraMap inverse() const;
};

MiuraMap miura_map(RingPtr from, RingPtr to, std::vector<std::pair<EvenOp, int>> image);

/// Conjugates an evolutionary system by the change of variables; potentials
/// are transported alongside the right-hand sides.
Flow miura_transport(const Flow &flow, const MiuraMap &map);

/// Standard charts: (u,v) -> (w1,w2) with u = L^{-1} w1, v = L^{-1} w2;
/// (u,v) -> (u1,u2) with u = u1, v = sqrt(R) u2; (u,w) -> (u,v) with w = R^{-1} v.
MiuraMap miura_uv_to_w12(int G);
MiuraMap miura_uv_to_dr(int G);
MiuraMap miura_uw_to_uv(int G);

/// Transports a flow built over (u,v) into the named chart ("uv"|"w"|"dr").
Flow flow_in_chart(const Flow &flow, const std::string &chart, int G);

/// Dilaton identity and the fixed genus-1 values on the transported flows.
CheckReport dr_checks(int E);

/// The obstruction computation: the candidate pair of flows has an affine-
/// in-alpha commutator whose vanishing is certified inconsistent.
CheckReport nogo_check(int E);

} // namespace dkdv
