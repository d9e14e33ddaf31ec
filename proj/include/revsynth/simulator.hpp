#pragma once

#include <cstdint>
#include <vector>

#include "revsynth/bit_string.hpp"
#include "revsynth/circuit.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/spec.hpp"
#include "revsynth/table.hpp"

namespace revsynth
{

/*! \brief Apply one gate to one line assignment. */
bit_string apply_gate( toffoli_gate const& gate, bit_string const& input );

/*! \brief Run a full cascade, first gate first. */
bit_string apply_circuit( circuit const& c, bit_string const& input );

/*! \brief The permutation a circuit computes, by exhaustive simulation. */
reversible_spec realized_spec( circuit const& c );

/*! \brief True iff the circuit computes exactly the given permutation. */
bool realizes( circuit const& c, reversible_spec const& spec );

/*! \brief True iff two equal-width circuits compute the same permutation. */
bool equivalent( circuit const& a, circuit const& b );

/*! \brief How table inputs and outputs map onto circuit lines.
 *
 * `input_lines[i]` carries table input bit i, `output_lines[j]` is read as
 * table output bit j, and every line in `constant_lines` is fed 0.  Lines
 * bound to nothing are fed 0 and ignored on output.
 */
struct io_binding
{
  std::vector<unsigned> input_lines;
  std::vector<unsigned> constant_lines;
  std::vector<unsigned> output_lines;
};

/*! \brief Check a circuit against an irreversible table under a binding.
 *
 * Sweeps all 2^inputs assignments; returns true iff every designated output
 * line reproduces the table on every row.
 */
bool realizes_function( circuit const& c, irreversible_table const& table, io_binding const& binding );

} // namespace revsynth
