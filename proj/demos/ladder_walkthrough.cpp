// Walks through the transition-matrix machinery on the four-state ladder
// system: prints the states, T, T^2, the walk count for three columns, and
// the census that reconciles walks with actual structures.

#include <iostream>

#include <arithlat/arithlat.hpp>

using namespace arithlat;

static void print_matrix(const ExactMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "  ") << m.at(i, j);
        std::cout << "\n";
    }
}

int main() {
    TransitionSystem ts = build_transition_matrix(example_state_space());

    std::cout << "states:";
    for (const ColumnState& s : ts.states) std::cout << " (" << s.values[0] << "," << s.values[1] << ")";
    std::cout << "\n\nT =\n";
    ExactMatrix t = ts.matrix_as_exact();
    print_matrix(t);
    std::cout << "\nT^2 =\n";
    print_matrix(matrix_power(t, 2));
    std::cout << "\nwalks over 3 columns: " << count_walks(ts, 3) << "\n";

    CensusReport census = transfer_census(ts.states, 3);
    std::cout << "lifted walks: " << census.lift_success_walks << ", failed walks: " << census.lift_failure_walks
              << ", distinct structures: " << census.structures.size() << "\n\n";

    std::cout << "first three lifted structures (column-wise r, then d):\n";
    for (size_t i = 0; i < 3 && i < census.structures.size(); ++i) {
        const ArithStructure& s = census.structures[i];
        std::cout << "  r = " << joined(s.r, ',') << "   d = " << joined(s.d, ',') << "\n";
    }

    std::cout << "\nbounded census of the full ladder m=3 (entries <= 8): "
              << oracle_enumerate(OracleConfig{Int(8), GraphDesc::ladder(3, VertexOrdering::Kind::column_wise), true})
                     .count
              << " structures\n";
    return 0;
}
