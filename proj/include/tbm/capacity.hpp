#pragma once

// Credibility functions: monotone set functions over a frame, tagged with
// the uncertainty model they came from, plus their basic-belief-mass
// representation. Constructors from the standard models, the
// co-credibility dual, axiom validation, and null-atom detection.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tbm/detail/subset_transforms.hpp"
#include "tbm/errors.hpp"
#include "tbm/frame.hpp"

namespace tbm {

/// Comparison tolerance for construction and validation checks.
inline constexpr double kValidationEps = 1e-9;
/// Tighter tolerance for internal identities (null atoms, exact checks).
inline constexpr double kIdentityEps = 1e-12;

enum class CapacityKind {
    belief,
    plausibility,
    probability,
    possibility_measure,
    necessity,
    generic_monotone,
};

inline std::string_view to_string(CapacityKind kind) {
    switch (kind) {
        case CapacityKind::belief: return "belief";
        case CapacityKind::plausibility: return "plausibility";
        case CapacityKind::probability: return "probability";
        case CapacityKind::possibility_measure: return "possibility_measure";
        case CapacityKind::necessity: return "necessity";
        case CapacityKind::generic_monotone: return "generic_monotone";
    }
    return "generic_monotone";
}

inline CapacityKind capacity_kind_from_string(std::string_view s) {
    if (s == "belief") return CapacityKind::belief;
    if (s == "plausibility") return CapacityKind::plausibility;
    if (s == "probability") return CapacityKind::probability;
    if (s == "possibility_measure") return CapacityKind::possibility_measure;
    if (s == "necessity") return CapacityKind::necessity;
    if (s == "generic_monotone") return CapacityKind::generic_monotone;
    throw ParseError("unknown capacity kind '" + std::string(s) + "'");
}

/// A set function over all 2^n subsets of a frame, indexed by bit pattern.
/// Construction checks only shape and finiteness; axiom conformance is the
/// job of validate(), so diagnostic tools can hold invalid instances.
class Capacity {
   public:
    Capacity(Frame frame, CapacityKind kind, std::vector<double> values)
        : frame_(std::move(frame)), kind_(kind), values_(std::move(values)) {
        if (values_.size() != frame_.subset_count()) {
            throw Error("capacity needs one value per subset (" +
                        std::to_string(frame_.subset_count()) + " entries)");
        }
        for (double v : values_) {
            if (!std::isfinite(v)) throw Error("capacity values must be finite");
        }
    }

    [[nodiscard]] const Frame& frame() const noexcept { return frame_; }
    [[nodiscard]] CapacityKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
    [[nodiscard]] double operator[](Subset a) const { return values_[a.bits()]; }
    [[nodiscard]] double at_full() const { return values_[frame_.full().bits()]; }

   private:
    Frame frame_;
    CapacityKind kind_;
    std::vector<double> values_;
};

/// Basic belief masses: one real per subset including the empty set, with
/// the empty-set mass carrying the open-world deficit. Masses may be
/// negative (the Moebius transform of a generic monotone capacity is);
/// only the total is pinned to one.
class MassFunction {
   public:
    MassFunction(Frame frame, std::vector<double> masses)
        : frame_(std::move(frame)), masses_(std::move(masses)) {
        if (masses_.size() != frame_.subset_count()) {
            throw Error("mass function needs one value per subset");
        }
        double total = 0.0;
        for (double m : masses_) {
            if (!std::isfinite(m)) throw Error("masses must be finite");
            total += m;
        }
        if (std::abs(total - 1.0) > kValidationEps) {
            throw InvalidMassError("masses sum to " + std::to_string(total) + ", expected 1");
        }
    }

    /// Convenience constructor from focal sets; unlisted subsets get zero.
    static MassFunction from_focal_sets(const Frame& frame,
                                        const std::vector<std::pair<Subset, double>>& focal) {
        std::vector<double> m(frame.subset_count(), 0.0);
        for (const auto& [set, mass] : focal) {
            if (!frame.contains_subset(set)) throw Error("focal set out of range for frame");
            m[set.bits()] += mass;
        }
        return MassFunction(frame, std::move(m));
    }

    [[nodiscard]] const Frame& frame() const noexcept { return frame_; }
    [[nodiscard]] const std::vector<double>& masses() const noexcept { return masses_; }
    [[nodiscard]] double operator[](Subset a) const { return masses_[a.bits()]; }
    [[nodiscard]] double empty_set_mass() const { return masses_[0]; }

    /// Focal sets (nonzero mass), ascending bit order.
    [[nodiscard]] std::vector<std::pair<Subset, double>> focal_sets() const {
        std::vector<std::pair<Subset, double>> out;
        for (std::uint32_t b = 0; b < masses_.size(); ++b) {
            if (masses_[b] != 0.0) out.emplace_back(Subset(b), masses_[b]);
        }
        return out;
    }

   private:
    Frame frame_;
    std::vector<double> masses_;
};

/// One possibility level in [0,1] per atom.
class PossibilityDistribution {
   public:
    PossibilityDistribution(Frame frame, std::vector<double> levels)
        : frame_(std::move(frame)), levels_(std::move(levels)) {
        if (levels_.size() != frame_.size()) {
            throw Error("possibility distribution needs one level per atom");
        }
        for (double v : levels_) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                throw Error("possibility levels must lie in [0,1]");
            }
        }
    }

    [[nodiscard]] const Frame& frame() const noexcept { return frame_; }
    [[nodiscard]] const std::vector<double>& levels() const noexcept { return levels_; }

   private:
    Frame frame_;
    std::vector<double> levels_;
};

// ---------------------------------------------------------------------------
// Constructors from the standard uncertainty models
// ---------------------------------------------------------------------------

/// Belief function bel(A) = sum of masses of nonempty subsets of A.
/// bel(1_Omega) = 1 - m(empty); masses must be nonnegative.
inline Capacity from_mass(const MassFunction& m) {
    for (std::uint32_t b = 0; b < m.masses().size(); ++b) {
        if (m.masses()[b] < -kIdentityEps) {
            throw NegativeMassError("negative mass on subset " +
                                    m.frame().subset_to_string(Subset(b)));
        }
    }
    std::vector<double> values = m.masses();
    values[0] = 0.0;  // the empty-set mass is never counted in bel
    detail::zeta_inplace(values);
    values[0] = 0.0;
    return Capacity(m.frame(), CapacityKind::belief, std::move(values));
}

/// Plausibility pl(A) = sum of masses of subsets intersecting A.
inline Capacity plausibility_from_mass(const MassFunction& m) {
    for (std::uint32_t b = 0; b < m.masses().size(); ++b) {
        if (m.masses()[b] < -kIdentityEps) {
            throw NegativeMassError("negative mass on subset " +
                                    m.frame().subset_to_string(Subset(b)));
        }
    }
    // pl(A) = (1 - m(empty)) - bel(complement A); computed directly as the
    // complement sum so both constructors stay independent.
    const Frame& frame = m.frame();
    std::vector<double> disjoint = m.masses();
    disjoint[0] = 0.0;
    detail::zeta_inplace(disjoint);  // disjoint[B] = mass of nonempty sets inside B
    const double assigned = disjoint[frame.full().bits()];
    std::vector<double> values(frame.subset_count());
    for (std::uint32_t b = 0; b < values.size(); ++b) {
        values[b] = assigned - disjoint[frame.complement(Subset(b)).bits()];
    }
    values[0] = 0.0;
    return Capacity(frame, CapacityKind::plausibility, std::move(values));
}

/// Additive capacity from atom probabilities (must sum to one).
inline Capacity from_probability(const Frame& frame, const std::vector<double>& p) {
    if (p.size() != frame.size()) {
        throw Error("need one probability per atom");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!std::isfinite(p[i]) || p[i] < -kIdentityEps) {
            throw NegativeValueError("negative probability for atom '" + frame.atom_name(i) + "'");
        }
        total += p[i];
    }
    if (std::abs(total - 1.0) > kValidationEps) {
        throw NotNormalizedError("probabilities sum to " + std::to_string(total) + ", expected 1");
    }
    std::vector<double> values(frame.subset_count(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        values[std::size_t{1} << i] = p[i];
    }
    detail::zeta_inplace(values);
    return Capacity(frame, CapacityKind::probability, std::move(values));
}

/// Possibility measure, necessity measure, and the consonant mass function
/// obtained by differencing the nested level sets of a distribution.
struct ConsonantDecomposition {
    Capacity possibility;
    Capacity necessity;
    MassFunction masses;
};

inline ConsonantDecomposition from_possibility(const PossibilityDistribution& pi) {
    const Frame& frame = pi.frame();
    const std::vector<double>& levels = pi.levels();
    const double top = *std::max_element(levels.begin(), levels.end());
    if (std::abs(top - 1.0) > kValidationEps) {
        throw NotNormalizedError("possibility distribution must reach 1 on some atom");
    }

    std::vector<double> poss(frame.subset_count(), 0.0);
    for (std::uint32_t b = 1; b < poss.size(); ++b) {
        const Subset a(b);
        poss[b] = std::max(poss[a.without(a.lowest_atom()).bits()], levels[a.lowest_atom()]);
    }
    std::vector<double> nec(frame.subset_count());
    for (std::uint32_t b = 0; b < nec.size(); ++b) {
        nec[b] = top - poss[frame.complement(Subset(b)).bits()];
    }

    // Distinct levels t1 > t2 > ... > tk; the level set at t_i gets mass
    // t_i - t_{i+1}, so the focal sets form a chain.
    std::vector<double> distinct = levels;
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<double> masses(frame.subset_count(), 0.0);
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        if (distinct[i] <= 0.0) break;
        const double next = (i + 1 < distinct.size()) ? std::max(distinct[i + 1], 0.0) : 0.0;
        std::uint32_t level_set = 0;
        for (std::size_t atom = 0; atom < levels.size(); ++atom) {
            if (levels[atom] >= distinct[i]) level_set |= std::uint32_t{1} << atom;
        }
        masses[level_set] += distinct[i] - next;
    }
    masses[0] += 1.0 - top;  // open-world deficit when top is within tolerance of 1

    return ConsonantDecomposition{
        Capacity(frame, CapacityKind::possibility_measure, std::move(poss)),
        Capacity(frame, CapacityKind::necessity, std::move(nec)),
        MassFunction(frame, std::move(masses)),
    };
}

// ---------------------------------------------------------------------------
// Dual, permutation, null atoms
// ---------------------------------------------------------------------------

inline CapacityKind dual_kind(CapacityKind kind) {
    switch (kind) {
        case CapacityKind::belief: return CapacityKind::plausibility;
        case CapacityKind::plausibility: return CapacityKind::belief;
        case CapacityKind::necessity: return CapacityKind::possibility_measure;
        case CapacityKind::possibility_measure: return CapacityKind::necessity;
        case CapacityKind::probability: return CapacityKind::probability;
        case CapacityKind::generic_monotone: return CapacityKind::generic_monotone;
    }
    return CapacityKind::generic_monotone;
}

/// Co-credibility: dual(A) = cr(1_Omega) - cr(complement A).
inline Capacity dual(const Capacity& cr) {
    const Frame& frame = cr.frame();
    const double top = cr.at_full();
    std::vector<double> values(frame.subset_count());
    for (std::uint32_t b = 0; b < values.size(); ++b) {
        values[b] = top - cr[frame.complement(Subset(b))];
    }
    return Capacity(frame, dual_kind(cr.kind()), std::move(values));
}

/// Relabeled capacity: result(G(A)) = cr(A).
inline Capacity permute(const Capacity& cr, const Permutation& g) {
    if (g.size() != cr.frame().size()) {
        throw FrameMismatchError("permutation size does not match frame");
    }
    std::vector<double> values(cr.values().size());
    for (std::uint32_t b = 0; b < values.size(); ++b) {
        values[g.apply(Subset(b)).bits()] = cr.values()[b];
    }
    return Capacity(cr.frame(), cr.kind(), std::move(values));
}

/// Relabeled masses: result(G(A)) = m(A).
inline MassFunction permute(const MassFunction& m, const Permutation& g) {
    if (g.size() != m.frame().size()) {
        throw FrameMismatchError("permutation size does not match frame");
    }
    std::vector<double> masses(m.masses().size());
    for (std::uint32_t b = 0; b < masses.size(); ++b) {
        masses[g.apply(Subset(b)).bits()] = m.masses()[b];
    }
    return MassFunction(m.frame(), std::move(masses));
}

/// Atoms whose addition never changes the capacity: cr(A + x) = cr(A) for
/// every A, within 1e-12. These are the doxastically impossible atoms.
inline Subset null_atoms(const Capacity& cr) {
    const Frame& frame = cr.frame();
    std::uint32_t null_bits = 0;
    for (std::size_t atom = 0; atom < frame.size(); ++atom) {
        const std::uint32_t bit = std::uint32_t{1} << atom;
        bool is_null = true;
        for (std::uint32_t b = 0; b < frame.subset_count() && is_null; ++b) {
            if (b & bit) continue;
            if (std::abs(cr.values()[b | bit] - cr.values()[b]) > kIdentityEps) {
                is_null = false;
            }
        }
        if (is_null) null_bits |= bit;
    }
    return Subset(null_bits);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class Strictness { structural, kind };

/// One violated rule with a witness pair of subsets and the offending values.
struct Violation {
    std::string rule;
    Subset a;
    Subset b;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct ValidationReport {
    bool closed_world = false;  // cr(1_Omega) = 1 within tolerance (flag, not an error)
    std::vector<Violation> violations;
    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

inline void check_structural(const Capacity& cr, ValidationReport& report) {
    const Frame& frame = cr.frame();
    const std::vector<double>& v = cr.values();
    if (std::abs(v[0]) > kValidationEps) {
        report.violations.push_back({"empty_set", Subset(), Subset(), v[0], 0.0});
    }
    for (std::uint32_t b = 0; b < v.size(); ++b) {
        if (v[b] < -kValidationEps || v[b] > 1.0 + kValidationEps) {
            report.violations.push_back({"range", Subset(b), Subset(b), v[b], v[b] < 0 ? 0.0 : 1.0});
        }
    }
    // Monotonicity over cover pairs A < A + x suffices by transitivity.
    for (std::size_t atom = 0; atom < frame.size(); ++atom) {
        const std::uint32_t bit = std::uint32_t{1} << atom;
        for (std::uint32_t b = 0; b < v.size(); ++b) {
            if (b & bit) continue;
            if (v[b] > v[b | bit] + kValidationEps) {
                report.violations.push_back({"monotonicity", Subset(b), Subset(b | bit), v[b], v[b | bit]});
            }
        }
    }
}

inline void check_kind(const Capacity& cr, ValidationReport& report) {
    const Frame& frame = cr.frame();
    const std::vector<double>& v = cr.values();
    switch (cr.kind()) {
        case CapacityKind::probability: {
            for (std::uint32_t b = 0; b < v.size(); ++b) {
                double sum = 0.0;
                for (std::size_t i = 0; i < frame.size(); ++i) {
                    if (b & (std::uint32_t{1} << i)) sum += v[std::uint32_t{1} << i];
                }
                if (std::abs(v[b] - sum) > kValidationEps) {
                    report.violations.push_back({"additivity", Subset(b), Subset(b), v[b], sum});
                }
            }
            break;
        }
        case CapacityKind::belief:
        case CapacityKind::plausibility: {
            // Belief: masses of the function itself are nonnegative.
            // Plausibility: masses of its dual are.
            std::vector<double> masses =
                cr.kind() == CapacityKind::belief ? v : dual(cr).values();
            moebius_inplace(masses);
            for (std::uint32_t b = 1; b < masses.size(); ++b) {
                if (masses[b] < -kValidationEps) {
                    report.violations.push_back({"mass_nonnegative", Subset(b), Subset(b), masses[b], 0.0});
                }
            }
            break;
        }
        case CapacityKind::possibility_measure: {
            // Maxitivity holds iff every value is the max over its atoms.
            for (std::uint32_t b = 1; b < v.size(); ++b) {
                const Subset a(b);
                if (a.cardinality() < 2) continue;
                const std::size_t low = a.lowest_atom();
                const double expected = std::max(v[a.without(low).bits()], v[std::uint32_t{1} << low]);
                if (std::abs(v[b] - expected) > kValidationEps) {
                    report.violations.push_back(
                        {"maxitivity", a.without(low), Subset(std::uint32_t{1} << low), v[b], expected});
                }
            }
            break;
        }
        case CapacityKind::necessity: {
            // Minitivity holds iff every value is the min over the co-atoms
            // above it: cr(A) = min over x outside A of cr(full minus x).
            const std::uint32_t full = frame.full().bits();
            for (std::uint32_t b = 0; b < full; ++b) {
                double expected = v[full];
                std::uint32_t witness = full;
                for (std::size_t x = 0; x < frame.size(); ++x) {
                    const std::uint32_t bit = std::uint32_t{1} << x;
                    if (b & bit) continue;
                    const double coatom = v[full ^ bit];
                    if (coatom < expected) {
                        expected = coatom;
                        witness = full ^ bit;
                    }
                }
                if (std::abs(v[b] - expected) > kValidationEps) {
                    report.violations.push_back({"minitivity", Subset(b), Subset(witness), v[b], expected});
                }
            }
            break;
        }
        case CapacityKind::generic_monotone:
            break;
    }
}

}  // namespace detail

/// Checks the capacity axioms. Structural mode covers range, the empty-set
/// anchor and monotonicity; kind mode adds the invariants of the tagged
/// uncertainty model. Violations are report entries, never exceptions.
inline ValidationReport validate(const Capacity& cr, Strictness strictness) {
    ValidationReport report;
    report.closed_world = std::abs(cr.at_full() - 1.0) <= kValidationEps;
    detail::check_structural(cr, report);
    if (strictness == Strictness::kind) {
        detail::check_kind(cr, report);
    }
    return report;
}

}  // namespace tbm
