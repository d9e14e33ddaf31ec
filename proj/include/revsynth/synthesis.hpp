#pragma once

#include <cstdint>
#include <vector>

#include "revsynth/bit_string.hpp"
#include "revsynth/circuit.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/spec.hpp"

namespace revsynth
{

/*! \brief How the next value to place is chosen while sorting.
 *
 * - `bsssn`: take the occupant of the lowest-index slot that is wrong.
 * - `variant`: scan target values upward and place the first misplaced one,
 *   repeating full passes until everything is home.
 * - `random`: draw uniformly among misplaced values with a seeded generator.
 */
enum class synthesis_method
{
  bsssn,
  variant,
  random
};

/*! \brief Deterministic tie-breaking between equally good chain steps.
 *
 * - `lowest_value`: smallest candidate as an integer.
 * - `highest_value`: flip the most significant still-differing line, i.e.
 *   the candidate that agrees with the destination on the top lines.
 * - `prefer_misplaced_then_lowest`: candidates that are themselves out of
 *   place first, then smallest.
 */
enum class tie_rule
{
  lowest_value,
  highest_value,
  prefer_misplaced_then_lowest
};

/*! \brief Which side of the truth table the cascade is read from. */
enum class translation_side
{
  output,
  input
};

struct synthesis_options
{
  synthesis_method method = synthesis_method::bsssn;
  tie_rule tie = tie_rule::lowest_value;
  translation_side side = translation_side::output;
  bool reduce_controls = false;
  uint64_t seed = 0; //!< only consulted by synthesis_method::random
  uint64_t max_gates = 0; //!< 0 means the default cap of 4 * n * 2^n
};

/*! \brief Working state of the sorter: which value sits in which slot. */
class sort_state
{
public:
  explicit sort_state( reversible_spec const& spec );

  unsigned width() const { return width_; }
  uint32_t size() const { return static_cast<uint32_t>( slots_.size() ); }

  /*! \brief Value currently stored at slot \p index. */
  uint32_t slot( uint32_t index ) const { return slots_[index]; }

  /*! \brief Slot currently holding value \p value. */
  uint32_t position_of( uint32_t value ) const { return pos_[value]; }

  /*! \brief True iff \p value already sits in its own slot. */
  bool placed( uint32_t value ) const { return pos_[value] == value; }

  bool sorted() const;

  /*! \brief Apply a gate to every stored value. */
  void apply( toffoli_gate const& gate );

private:
  unsigned width_;
  std::vector<uint32_t> slots_;
  std::vector<uint32_t> pos_;
};

/*! \brief The unique gate that exchanges two values at Hamming distance 1.
 *
 * The target is the differing line; every other line becomes a control whose
 * polarity matches the shared bit value, so exactly \p p and \p q fire.
 */
toffoli_gate swap_gate( bit_string const& p, bit_string const& q );

/*! \brief One step of the swap chain: move \p b one line closer to \p a.
 *
 * Returns a value c adjacent to \p b with minimal distance to \p a (always
 * one less than the distance of \p b); ties between candidates are settled
 * by \p rule, consulting \p state for the misplaced-first rule.
 */
bit_string chain_step( bit_string const& a, bit_string const& b, sort_state const& state, tie_rule rule );

/*! \brief Drop controls from a freshly emitted sorting gate when safe.
 *
 * Greedy: repeatedly remove the single control whose removal keeps every
 * already-placed value fixed and lowers (or at worst preserves) the
 * complexity of the state after applying the gate, until no removal helps.
 * \p state is the slot configuration just before the gate is applied.
 */
toffoli_gate reduce_controls( toffoli_gate const& gate, sort_state const& state );

/*! \brief Sort the spec's output column to the identity, recording the swaps.
 *
 * Returns the gate list in discovery order.  Applying the gates to the
 * output column in this order turns the spec into the identity.
 */
std::vector<toffoli_gate> sort_network( reversible_spec const& spec, synthesis_options const& options = {} );

/*! \brief Full synthesis: a circuit whose realized permutation equals \p spec.
 *
 * With `side = output` the sorter runs on the spec itself and the discovered
 * gates are emitted in reverse, so the cascade maps each input row to its
 * output row.  With `side = input` the sorter runs on the inverse spec and
 * the gates are emitted in discovery order; the result realizes the same
 * permutation.
 */
circuit synthesize( reversible_spec const& spec, synthesis_options const& options = {} );

} // namespace revsynth
