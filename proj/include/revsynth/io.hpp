#pragma once

#include <string>

#include "revsynth/circuit.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/optimizer.hpp"
#include "revsynth/spec.hpp"
#include "revsynth/table.hpp"

namespace revsynth
{

/*! \brief Parse a specification file.
 *
 * Grammar: `n <width>` then `perm <2^width integers>`; `#` starts a comment
 * that runs to the end of the line; whitespace is free-form.
 */
reversible_spec parse_spec( std::string const& text );

/*! \brief Canonical text form of a specification; round-trips through parse_spec. */
std::string format_spec( reversible_spec const& spec );

/*! \brief Parse a gate-list file.
 *
 * Grammar: an optional leading `.lines <n>` directive, then gates in
 * application order.  A gate is `T(controls:target)` where controls are
 * comma-separated line letters (`a` is line 0), a trailing `'` marks a
 * negative control, and `;` is accepted in place of `:`.  `T(:x)` and `T(x)`
 * both denote NOT on x.  Gates may sit on one line or many; `#` comments.
 * Without `.lines` the width is inferred from the highest line used.
 */
circuit parse_circuit( std::string const& text );

/*! \brief One gate in canonical form: controls sorted by line, `'` for
 * negative, `:` before the target, NOT printed as `T(:a)`. */
std::string format_gate( toffoli_gate const& gate );

/*! \brief Canonical gate-list text with a `.lines` header, one gate per
 * line; round-trips through parse_circuit. */
std::string format_circuit( circuit const& c );

/*! \brief Parse a truth-table file.
 *
 * Grammar: `.inputs <n>` and `.outputs <k>` directives, then exactly 2^n
 * rows in ascending input order, each a k-character block of 0/1 with the
 * most significant output first; `#` comments.
 */
irreversible_table parse_table( std::string const& text );

/*! \brief Canonical text form of a truth table; round-trips through parse_table. */
std::string format_table( irreversible_table const& table );

/*! \brief Parse a rewrite-rule file: circuit grammar above and below a line
 * containing only `=>`, pattern first.  The rule is validated on
 * construction (see make_template). */
template_rule parse_template( std::string const& text, std::string name );

} // namespace revsynth
