#ifndef COINV_MODULE_HPP
#define COINV_MODULE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "coinv/group.hpp"
#include "coinv/matrix.hpp"
#include "coinv/polynomial.hpp"

namespace coinv {

// One direct summand: its variables (ring indices, in the summand's own
// terminals-first order) and its designated terminal variables.
struct Summand {
    std::vector<std::size_t> vars;
    std::vector<std::size_t> terminals;
};

// How a module was built; round-trips through the CLI JSON schema.
struct Construction {
    enum class Kind { cyclic, klein, direct_sum, matrices };

    Kind kind = Kind::matrices;
    std::uint32_t p = 2;
    // cyclic
    std::uint32_t r = 1;
    std::vector<std::uint32_t> blocks;
    // klein
    std::uint32_t m = 2;
    // direct_sum
    std::vector<Construction> summands;
    // matrices
    std::vector<MatrixGF> dual_generators;
    std::optional<std::vector<std::size_t>> terminals;
};

// A named representation bundle: the ring (designated terminals listed
// first), the closed group, and the summand partition. Immutable once
// built; the unit every pipeline consumes.
struct ModuleInstance {
    RingPtr ring;
    GroupRep group;
    std::vector<Summand> summands;
    Construction provenance;

    std::uint32_t p() const { return ring->p(); }
    std::size_t nvars() const { return ring->nvars(); }

    // Designated terminal variables across all summands; constructors
    // arrange these as ring indices 0..k, ahead of the remaining
    // variables.
    std::vector<std::size_t> designated_terminals() const;

    // True when no generator moves the variable.
    bool is_fixed_variable(std::size_t var) const;

    std::size_t summand_of(std::size_t var) const;
};

// Construction-time checks shared by every constructor: partition sanity,
// terminals-first ordering, designated terminals genuinely terminal, and
// no variable that is simultaneously fixed and terminal (such a variable
// spans a trivial summand).
void validate_module(const ModuleInstance& mod);

} // namespace coinv

#endif
