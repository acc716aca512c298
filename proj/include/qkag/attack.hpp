#pragma once

#include <array>

namespace qkag {

enum class Protocol { FourState, SixState };

/// The three attack closures exposed by the library. ShannonOptimal4 maximizes
/// Eve's Shannon information on the 4-state protocol; Extremal4 is the 4-state
/// attack with the lowest disentanglement threshold (c_phi = 1); SixState is
/// the symmetric 6-state attack (c_phi = 0, delta1 = 1).
enum class AttackVariant { ShannonOptimal4, Extremal4, SixState };

Protocol protocol_of(AttackVariant variant);

/// One symmetric incoherent attack, reduced to the parameters it induces on
/// the classical random variables: fidelity/disturbance, Eve's ancilla
/// overlaps, and her per-branch guessing probabilities.
struct AttackParams {
    AttackVariant variant;
    double f;       // fidelity, P(Y = X); f + d == 1 exactly
    double d;       // disturbance (QBER)
    double c_psi;   // overlap of Eve's ancilla states on the undisturbed branch
    double c_phi;   // overlap on the disturbed branch
    double delta0;  // P(Z2 = Y | Z1 = 0), in [1/2, 1]
    double delta1;  // P(Z2 = Y | Z1 = 1), in [1/2, 1]
};

/// Throws std::domain_error unless the fields satisfy the model constraints
/// (f + d = 1 exactly, the overlap/fidelity relation, delta bounds, and the
/// six-state closure when applicable).
void validate(const AttackParams& params);

/// Joint law of (X, Y, Z1, Z2), 16 cells. Cells with z1 != x^y are exact
/// zeros; the marginal of X is uniform.
struct JointDistribution {
    std::array<double, 16> p{};

    static constexpr int index(int x, int y, int z1, int z2) {
        return (x << 3) | (y << 2) | (z1 << 1) | z2;
    }
    double operator()(int x, int y, int z1, int z2) const {
        return p[index(x, y, z1, z2)];
    }
};

/// Fidelity induced by a pair of ancilla overlaps:
/// (1 + c_phi) / (2 - c_psi + c_phi).
double fidelity_from_overlaps(double c_psi, double c_phi);

/// Inverse of fidelity_from_overlaps in its first argument; requires
/// f in (1/2, 1] and a result inside [-1, 1].
double overlap_from_fidelity(double f, double c_phi);

/// Optimal probability of discriminating two pure states with overlap c:
/// (1 + sqrt(1 - c^2)) / 2.
double helstrom_guess_probability(double c);

/// Builds the attack of the given variant that produces the given QBER.
/// Domain: qber in [0, 1/2) for ShannonOptimal4 and SixState, and
/// qber in [0, 1/3] for Extremal4 (beyond that the closure would need a
/// negative undisturbed overlap).
AttackParams attack_from_qber(AttackVariant variant, double qber);

/// Least upper bound of the valid qber range for attack_from_qber.
double qber_domain_sup(AttackVariant variant);

JointDistribution joint_distribution(const AttackParams& params);

}  // namespace qkag
