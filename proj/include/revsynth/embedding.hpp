#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "revsynth/spec.hpp"
#include "revsynth/table.hpp"

namespace revsynth
{

/*! \brief Occurrence count of the most frequent output pattern. */
uint32_t output_multiplicity( irreversible_table const& table );

/*! \brief Fewest unconstrained output lines a reversible realization needs
 * when one output pattern occurs \p m times: ceil(log2 m). */
unsigned min_garbage( uint32_t m );

/*! \brief Record of how an irreversible table was made reversible. */
struct embedding_report
{
  uint32_t multiplicity = 1;              //!< m, the highest output-pattern count
  unsigned garbage_floor = 0;             //!< min_garbage(multiplicity)
  unsigned total_lines = 0;               //!< width of the reversible spec
  std::vector<unsigned> constant_lines;   //!< added input lines, fed constant 0
  std::vector<unsigned> output_bindings;  //!< line carrying each table output
  std::vector<unsigned> garbage_lines;    //!< lines not bound to any output
  std::vector<unsigned> preserved_inputs; //!< garbage lines equal to their input on every constant-0 row
  bool xor_completion = false;            //!< nonzero-constant rows filled by xor-translation
  bool greedy_completion = false;         //!< some row needed the smallest-unused fallback
};

/*! \brief Turn an n-input k-output table into a reversible specification.
 *
 * The spec has max(n, min_garbage(m) + k) lines; lines beyond the original
 * n inputs are added constant-0 inputs.  Output j is realized on line
 * total - k + j.  Rows with all constants at 0 reproduce the table exactly
 * on those lines and carry a distinguishing tag on the lower (garbage)
 * lines — the input's own low bits when free, else the smallest tag unused
 * within the output class.  Rows with a nonzero constant assignment are
 * completed by xor-ing the constant bits onto their own lines when that
 * stays a bijection (it does for all the worked examples), else by a
 * deterministic smallest-unused fill.  The report records every choice.
 */
std::pair<reversible_spec, embedding_report> embed( irreversible_table const& table );

} // namespace revsynth
