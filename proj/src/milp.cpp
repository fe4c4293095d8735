#include "cnotopt/milp.hpp"

#include <sstream>

namespace cnotopt {

namespace {

std::string y_name(int v, int p) {
    return "y_" + std::to_string(v + 1) + "_" + std::to_string(p + 1);
}

std::string z_name(int e, int p, int q) {
    return "z_" + std::to_string(e + 1) + "_" + std::to_string(p + 1) + "_" +
           std::to_string(q + 1);
}

}  // namespace

MilpModel export_milp(const InteractionGraph& ig, const DistanceTable& t) {
    if (ig.n > t.n()) raise(ErrorCode::TooManyQubits, "more logical than physical qubits");
    const int m = ig.n;
    const int n_phys = t.n();
    MilpModel model;

    for (int v = 0; v < m; ++v)
        for (int p = 0; p < n_phys; ++p) model.binaries.push_back(y_name(v, p));
    model.n_y_variables = m * n_phys;

    for (int v = 0; v < m; ++v) {
        MilpModel::Constraint row;
        row.name = "assign_" + std::to_string(v + 1);
        for (int p = 0; p < n_phys; ++p) row.terms.push_back({1, y_name(v, p)});
        row.sense = '=';
        row.rhs = 1;
        model.constraints.push_back(std::move(row));
    }
    for (int p = 0; p < n_phys; ++p) {
        MilpModel::Constraint row;
        row.name = "slot_" + std::to_string(p + 1);
        for (int v = 0; v < m; ++v) row.terms.push_back({1, y_name(v, p)});
        row.sense = '<';
        row.rhs = 1;
        model.constraints.push_back(std::move(row));
    }
    model.n_assignment_constraints = m + n_phys;

    for (int e = 0; e < static_cast<int>(ig.edges.size()); ++e) {
        const auto& edge = ig.edges[static_cast<std::size_t>(e)];
        for (int p = 0; p < n_phys; ++p) {
            for (int q = 0; q < n_phys; ++q) {
                if (p == q) continue;
                const std::string z = z_name(e, p, q);
                model.binaries.push_back(z);
                ++model.n_z_variables;
                model.objective.push_back({edge.weight * cost_s(t.distance(p, q)), z});
                MilpModel::Constraint row;
                row.name = "link_" + std::to_string(e + 1) + "_" + std::to_string(p + 1) +
                           "_" + std::to_string(q + 1);
                row.terms.push_back({1, z});
                row.terms.push_back({-1, y_name(edge.u, p)});
                row.terms.push_back({-1, y_name(edge.v, q)});
                row.sense = '>';
                row.rhs = -1;
                model.constraints.push_back(std::move(row));
            }
        }
    }
    return model;
}

namespace {

void write_terms(std::ostringstream& out, const std::vector<MilpModel::Term>& terms) {
    int column = 0;
    bool first = true;
    for (const auto& term : terms) {
        std::ostringstream piece;
        if (first) {
            if (term.coeff < 0) piece << "- ";
        } else {
            piece << (term.coeff < 0 ? "- " : "+ ");
        }
        const std::int64_t mag = term.coeff < 0 ? -term.coeff : term.coeff;
        if (mag != 1) piece << mag << ' ';
        piece << term.var;
        const std::string text = piece.str();
        if (column + static_cast<int>(text.size()) > 72) {
            out << "\n   ";
            column = 3;
        }
        out << ' ' << text;
        column += static_cast<int>(text.size()) + 1;
        first = false;
    }
}

}  // namespace

std::string write_lp(const MilpModel& model) {
    std::ostringstream out;
    out << "\\ CNOT placement model\n";
    out << "Minimize\n obj:";
    write_terms(out, model.objective);
    out << "\nSubject To\n";
    for (const auto& row : model.constraints) {
        out << ' ' << row.name << ':';
        write_terms(out, row.terms);
        out << ' ';
        switch (row.sense) {
            case '<': out << "<="; break;
            case '>': out << ">="; break;
            default: out << '='; break;
        }
        out << ' ' << row.rhs << "\n";
    }
    out << "Binary\n";
    for (const auto& name : model.binaries) out << ' ' << name << "\n";
    out << "End\n";
    return out.str();
}

}  // namespace cnotopt
