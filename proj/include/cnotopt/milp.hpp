#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cnotopt/placement.hpp"

namespace cnotopt {

/// Mixed-integer linear model for the placement objective, written in the
/// standard LP text format so off-the-shelf solvers can minimize it.
///
/// Variables: y_<v>_<p> (logical v sits on physical p) one-hot per logical
/// row and at most one per physical column; z_<e>_<p>_<q> per weighted pair
/// e = {u, v} and ordered physical pair (p, q), p != q, lower-bounded by
/// y_u_p + y_v_q - 1. Objective: sum of weight(e) * cost_s(d(p, q)) * z.
struct MilpModel {
    struct Term {
        std::int64_t coeff = 0;
        std::string var;
    };
    struct Constraint {
        std::string name;
        std::vector<Term> terms;
        char sense = '<';  // '<' (<=), '>' (>=), '=' (=)
        std::int64_t rhs = 0;
    };

    std::vector<Term> objective;
    std::vector<Constraint> constraints;
    std::vector<std::string> binaries;
    int n_y_variables = 0;
    int n_z_variables = 0;
    int n_assignment_constraints = 0;  // one per logical qubit plus one per vertex
};

/// Builds the placement model. Throws TooManyQubits.
MilpModel export_milp(const InteractionGraph& ig, const DistanceTable& t);

/// LP file text ("Minimize / Subject To / Binary / End" sections).
std::string write_lp(const MilpModel& model);

}  // namespace cnotopt
