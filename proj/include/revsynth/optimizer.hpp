#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revsynth/circuit.hpp"
#include "revsynth/gate.hpp"

namespace revsynth
{

/*! \brief Largest template arity the exhaustive validator will sweep. */
inline constexpr unsigned template_arity_limit = 10u;

/*! \brief Widest circuit for which optimize() re-checks equivalence exhaustively. */
inline constexpr unsigned equivalence_check_width_limit = 10u;

/*! \brief A rewrite rule: a gate sequence and a shorter equivalent.
 *
 * Pattern and replacement are circuits over abstract lines 0..arity-1; a
 * match binds those lines injectively (polarity-preserving) to concrete
 * circuit lines.  Rules constructed through make_template are guaranteed
 * simulation-equivalent with a strictly shorter replacement.
 */
struct template_rule
{
  std::string name;
  circuit pattern;
  circuit replacement;

  unsigned arity() const { return pattern.width(); }
};

/*! \brief Pass selection and limits for optimize(). */
struct optimize_config
{
  bool enable_pair_removal = true;
  bool enable_merge = true;
  bool enable_control_pruning = true;
  std::vector<template_rule> templates;
  unsigned max_passes = 32;

  optimize_config();
};

/*! \brief Sufficient syntactic test that two gates may be reordered.
 *
 * True when neither gate's target line is a control line of the other; the
 * two cascades gh and hg are then simulation-equivalent.  (The test is
 * sufficient, not necessary.)
 */
bool gates_commute( toffoli_gate const& g, toffoli_gate const& h );

/*! \brief Delete pairs of identical gates separated only by commuting gates.
 *
 * Repeatedly finds i < j with equal gates where every gate strictly between
 * commutes with them, removes both, and iterates to a fixed point.
 */
circuit remove_useless_pairs( circuit const& c );

/*! \brief Merge two adjacent gates that differ in one control polarity.
 *
 * If the gates share target and control lines and exactly one control line
 * has opposite polarity, the pair fires independently of that line and
 * collapses to one gate without it.  Returns nothing when the rule does not
 * apply (identical gates are pair-removal's job, not a merge).
 */
std::optional<toffoli_gate> merge_adjacent( toffoli_gate const& g, toffoli_gate const& h );

/*! \brief Run merge_adjacent over the whole circuit to a fixed point. */
circuit merge_adjacent_pass( circuit const& c );

/*! \brief Exhaustive equivalence of a rule's pattern and replacement.
 *
 * Simulates both over all 2^arity inputs.  Throws arity_error above
 * template_arity_limit.
 */
bool validate_template( template_rule const& rule );

/*! \brief Build a template rule, refusing anything unsound.
 *
 * Checks that widths agree, that the replacement is strictly shorter, that
 * it only uses lines the pattern uses, and that validate_template holds.
 */
template_rule make_template( std::string name, circuit pattern, circuit replacement );

/*! \brief The shipped rule set: pair cancellations for NOT/CNOT/Toffoli,
 * opposite-polarity control merges, and NOT-conjugations that flip a control
 * polarity.  Every rule has passed make_template's validation. */
std::vector<template_rule> const& built_in_templates();

/*! \brief Rewrite the circuit with the given validated rules until none fits.
 *
 * A pattern may match non-adjacent gates: skipped gates are allowed when
 * they commute with every matched gate to their right, which lets the match
 * slide together into one block.  Each substitution strictly reduces the
 * gate count, so the fixed point always exists.
 */
circuit apply_templates( circuit const& c, std::vector<template_rule> const& templates );

/*! \brief Drop a control shared by a conjugating gate pair and everything
 * between them.
 *
 * For identical gates at i < j and a control (line, polarity) of that gate
 * carried by every gate strictly between: on assignments where the control
 * fails, the whole segment is the identity both before and after dropping
 * the control from the pair (the in-between gates are inert and the pair
 * cancels itself); on assignments where it holds, nothing changed.  The
 * control is therefore removed from both copies.  Runs to a fixed point.
 */
circuit prune_conjugated_controls( circuit const& c );

/*! \brief Alternate all enabled passes until nothing changes.
 *
 * Gate count never increases.  For widths up to
 * equivalence_check_width_limit the result is re-checked against the input
 * by exhaustive simulation; wider circuits skip the check with a notice on
 * the log stream.
 */
circuit optimize( circuit const& c, optimize_config const& config = {} );

} // namespace revsynth
