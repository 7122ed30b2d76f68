#pragma once

// Finite propositional spaces: a frame is an ordered set of named atoms,
// and every proposition over it is a subset encoded as a bit pattern
// (bit i set <=> atom i belongs). All 2^n subsets are materializable up
// to the configurable atom cap.

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tbm/errors.hpp"

namespace tbm {

/// Default (and absolute) atom cap; 2^24 subset vectors still fit in memory.
inline constexpr std::size_t kMaxAtoms = 24;

/// A subset of a frame's atoms, encoded as a bit pattern over atom indices.
/// Plain value type; the owning Frame supplies the universe size.
class Subset {
   public:
    constexpr Subset() = default;
    explicit constexpr Subset(std::uint32_t bits) : bits_(bits) {}

    [[nodiscard]] constexpr std::uint32_t bits() const noexcept { return bits_; }
    [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] constexpr std::size_t cardinality() const noexcept {
        return static_cast<std::size_t>(std::popcount(bits_));
    }
    [[nodiscard]] constexpr bool contains(std::size_t atom) const noexcept {
        return (bits_ >> atom) & 1U;
    }
    [[nodiscard]] constexpr bool subset_of(Subset other) const noexcept {
        return (bits_ & ~other.bits_) == 0;
    }
    [[nodiscard]] constexpr bool intersects(Subset other) const noexcept {
        return (bits_ & other.bits_) != 0;
    }
    [[nodiscard]] constexpr Subset with(std::size_t atom) const noexcept {
        return Subset(bits_ | (std::uint32_t{1} << atom));
    }
    [[nodiscard]] constexpr Subset without(std::size_t atom) const noexcept {
        return Subset(bits_ & ~(std::uint32_t{1} << atom));
    }
    /// Index of the lowest atom in the subset; undefined on the empty set.
    [[nodiscard]] constexpr std::size_t lowest_atom() const noexcept {
        return static_cast<std::size_t>(std::countr_zero(bits_));
    }

    friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset(a.bits_ & b.bits_); }
    friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset(a.bits_ | b.bits_); }
    friend constexpr Subset operator^(Subset a, Subset b) noexcept { return Subset(a.bits_ ^ b.bits_); }

    constexpr auto operator<=>(const Subset&) const noexcept = default;

   private:
    std::uint32_t bits_ = 0;
};

/// Ordered set of named atoms. Immutable after construction; the atom
/// ordering fixes the bit encoding of every subset, so results over the
/// same frame are byte-reproducible.
class Frame {
   public:
    /// Atom names must be unique, non-empty, and free of whitespace and
    /// the characters `{ } , | ~` (they appear in file formats, event
    /// expressions, and combined-frame names).
    explicit Frame(std::vector<std::string> atoms, std::size_t max_atoms = kMaxAtoms) : atoms_(std::move(atoms)) {
        if (max_atoms > kMaxAtoms) {
            throw FrameTooLargeError("atom cap cannot exceed " + std::to_string(kMaxAtoms));
        }
        if (atoms_.empty()) {
            throw Error("a frame needs at least one atom");
        }
        if (atoms_.size() > max_atoms) {
            throw FrameTooLargeError("frame has " + std::to_string(atoms_.size()) +
                                     " atoms, cap is " + std::to_string(max_atoms));
        }
        index_.reserve(atoms_.size());
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            validate_atom_name(atoms_[i]);
            if (!index_.emplace(atoms_[i], i).second) {
                throw Error("duplicate atom name '" + atoms_[i] + "'");
            }
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }
    [[nodiscard]] std::size_t subset_count() const noexcept { return std::size_t{1} << atoms_.size(); }
    [[nodiscard]] const std::vector<std::string>& atoms() const noexcept { return atoms_; }
    [[nodiscard]] const std::string& atom_name(std::size_t i) const { return atoms_.at(i); }

    [[nodiscard]] std::size_t index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) {
            throw UnknownAtomError(std::string(name));
        }
        return it->second;
    }

    [[nodiscard]] Subset full() const noexcept {
        return Subset(static_cast<std::uint32_t>(subset_count() - 1));
    }
    [[nodiscard]] Subset singleton(std::size_t atom) const noexcept {
        return Subset(std::uint32_t{1} << atom);
    }
    [[nodiscard]] Subset complement(Subset a) const noexcept {
        return Subset(~a.bits() & full().bits());
    }
    [[nodiscard]] bool contains_subset(Subset a) const noexcept {
        return a.bits() < subset_count();
    }
    [[nodiscard]] bool same_atoms(const Frame& other) const noexcept {
        return atoms_ == other.atoms_;
    }

    /// Renders a subset as `{a,c}`; the empty set is `{}`.
    [[nodiscard]] std::string subset_to_string(Subset a) const {
        std::string out = "{";
        bool first = true;
        for (std::size_t i = 0; i < size(); ++i) {
            if (!a.contains(i)) continue;
            if (!first) out += ',';
            out += atoms_[i];
            first = false;
        }
        out += '}';
        return out;
    }

    friend bool operator==(const Frame& a, const Frame& b) noexcept { return a.atoms_ == b.atoms_; }

   private:
    static void validate_atom_name(const std::string& name) {
        if (name.empty()) {
            throw Error("empty atom name");
        }
        for (unsigned char c : name) {
            if (std::isspace(c) || c == '{' || c == '}' || c == ',' || c == '|' || c == '~') {
                throw Error("atom name '" + name + "' contains a reserved character");
            }
        }
    }

    std::vector<std::string> atoms_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Builds the subset holding exactly the named atoms; duplicates in the
/// list are allowed, the empty list gives the empty set.
inline Subset parse_subset(const Frame& frame, const std::vector<std::string>& names) {
    Subset out;
    for (const auto& name : names) {
        out = out.with(frame.index_of(name));
    }
    return out;
}

/// Bijection on atom indices 0..n-1.
class Permutation {
   public:
    explicit Permutation(std::vector<std::size_t> mapping) : map_(std::move(mapping)) {
        std::vector<bool> seen(map_.size(), false);
        for (std::size_t v : map_) {
            if (v >= map_.size() || seen[v]) {
                throw Error("permutation mapping is not a bijection");
            }
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = i;
        return Permutation(std::move(m));
    }

    [[nodiscard]] std::size_t size() const noexcept { return map_.size(); }
    [[nodiscard]] std::size_t operator()(std::size_t atom) const { return map_.at(atom); }

    /// Image set {G(x) : x in A}; preserves cardinality.
    [[nodiscard]] Subset apply(Subset a) const {
        std::uint32_t out = 0;
        for (std::size_t i = 0; i < map_.size(); ++i) {
            if (a.contains(i)) out |= std::uint32_t{1} << map_[i];
        }
        return Subset(out);
    }

    [[nodiscard]] Permutation inverse() const {
        std::vector<std::size_t> inv(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
        return Permutation(std::move(inv));
    }

   private:
    std::vector<std::size_t> map_;
};

inline Subset apply_permutation(const Permutation& g, Subset a) { return g.apply(a); }

// ---------------------------------------------------------------------------
// Subset enumeration. Every family yields each qualifying subset exactly
// once, in ascending bit order.
// ---------------------------------------------------------------------------

/// All 2^n subsets.
inline std::vector<Subset> enumerate_subsets(const Frame& frame) {
    std::vector<Subset> out;
    out.reserve(frame.subset_count());
    for (std::uint32_t b = 0; b < frame.subset_count(); ++b) out.emplace_back(b);
    return out;
}

/// All subsets of `a`. Ascending submask iteration: for masks disjoint
/// from the fixed part, (s - mask) & mask steps to the next submask.
inline std::vector<Subset> enumerate_subsets_of(const Frame& frame, Subset a) {
    if (!frame.contains_subset(a)) {
        throw Error("subset out of range for frame");
    }
    const std::uint32_t mask = a.bits();
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << a.cardinality());
    std::uint32_t s = 0;
    while (true) {
        out.emplace_back(s);
        if (s == mask) break;
        s = (s - mask) & mask;
    }
    return out;
}

/// All supersets of `a`.
inline std::vector<Subset> enumerate_supersets_of(const Frame& frame, Subset a) {
    if (!frame.contains_subset(a)) {
        throw Error("subset out of range for frame");
    }
    const std::uint32_t rest = frame.complement(a).bits();
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << Subset(rest).cardinality());
    std::uint32_t s = 0;
    while (true) {
        out.emplace_back(a.bits() | s);
        if (s == rest) break;
        s = (s - rest) & rest;
    }
    return out;
}

/// All subsets containing the given atom.
inline std::vector<Subset> enumerate_subsets_containing(const Frame& frame, std::size_t atom) {
    if (atom >= frame.size()) {
        throw Error("atom index out of range");
    }
    return enumerate_supersets_of(frame, frame.singleton(atom));
}

}  // namespace tbm
