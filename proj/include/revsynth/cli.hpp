#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revsynth
{

/*! \brief Run the command-line tool in-process.
 *
 * \p args holds the arguments after the program name.  All regular output
 * goes to \p out, diagnostics to \p err, so tests can capture both.
 *
 * \return 0 on success, 1 when a verification reports a mismatch,
 *         2 on usage or input errors */
int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace revsynth
