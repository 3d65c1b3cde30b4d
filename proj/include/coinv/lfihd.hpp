#ifndef COINV_LFIHD_HPP
#define COINV_LFIHD_HPP

#include <cstdint>

#include "coinv/module.hpp"
#include "coinv/polynomial.hpp"

namespace coinv {

// A variable is terminal when the span of the other variables is a
// G-submodule, i.e. no other variable's image under any generator touches
// it. Shifting a terminal variable by a scalar then commutes with G.
bool is_terminal(std::size_t var_index, const GroupRep& G);
bool is_terminal(std::size_t var_index, const ModuleInstance& mod);

struct TerminalVariable {
    const ModuleInstance* module;
    std::size_t var_index;
    std::size_t summand_index;
};

// Validates terminality; throws input_error otherwise.
TerminalVariable terminal_variable(const ModuleInstance& mod,
                                   std::size_t var_index);

// The i-th map of the locally finite iterative higher derivation attached
// to a terminal variable x: delta(x, i, f) is the coefficient of t^i in
// f(x + t), every other variable fixed. Computed term by term with
// mod-p binomials, so the iterativity law stays an independent check.
Polynomial delta(const TerminalVariable& var, std::uint32_t i,
                 const Polynomial& f);

// Evaluates sum_{i=0..d} (-1)^i x^i delta(x, i, f) with d the x-degree of
// f, checks it equals the x-free part of f, and returns that part.
// A mismatch raises internal_error: it can only mean a delta bug.
Polynomial check_ident(const TerminalVariable& var, const Polynomial& f);

} // namespace coinv

#endif
