#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace revsynth
{

/*! \brief Base class for all library errors. */
class error : public std::runtime_error
{
public:
  explicit error( std::string const& what ) : std::runtime_error( what ) {}
};

/*! \brief A width was outside the supported range 1..16. */
class width_error : public error
{
public:
  explicit width_error( std::string const& what ) : error( what ) {}
};

/*! \brief A value did not fit into the given width. */
class value_error : public error
{
public:
  explicit value_error( std::string const& what ) : error( what ) {}
};

/*! \brief Two objects that must share a width did not. */
class width_mismatch : public error
{
public:
  explicit width_mismatch( std::string const& what ) : error( what ) {}
};

/*! \brief Two bit strings expected at Hamming distance 1 were not. */
class not_adjacent : public error
{
public:
  explicit not_adjacent( std::string const& what ) : error( what ) {}
};

/*! \brief A value sequence is not a permutation; carries the first value seen twice. */
class not_a_permutation : public error
{
public:
  not_a_permutation( std::string const& what, uint32_t duplicate )
      : error( what ), duplicate_( duplicate )
  {
  }

  uint32_t duplicate() const { return duplicate_; }

private:
  uint32_t duplicate_;
};

/*! \brief Synthesis emitted more gates than the configured safety cap. */
class gate_budget_exceeded : public error
{
public:
  explicit gate_budget_exceeded( std::string const& what ) : error( what ) {}
};

/*! \brief A template was declared over more lines than the validator can sweep. */
class arity_error : public error
{
public:
  explicit arity_error( std::string const& what ) : error( what ) {}
};

/*! \brief An embedding would need more lines than the toolkit supports. */
class line_limit_error : public error
{
public:
  explicit line_limit_error( std::string const& what ) : error( what ) {}
};

/*! \brief An input/output binding is inconsistent with circuit or table. */
class binding_error : public error
{
public:
  explicit binding_error( std::string const& what ) : error( what ) {}
};

/*! \brief Textual input could not be parsed; carries a 1-based position. */
class parse_error : public error
{
public:
  parse_error( std::string const& what, std::size_t line, std::size_t column )
      : error( what + " (line " + std::to_string( line ) + ", column " + std::to_string( column ) + ")" ),
        line_( line ),
        column_( column )
  {
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/*! \brief A gate names its target among its controls. */
class self_control_error : public parse_error
{
public:
  self_control_error( std::string const& what, std::size_t line, std::size_t column )
      : parse_error( what, line, column )
  {
  }
};

/*! \brief A gate names a line outside the declared width. */
class unknown_line_error : public parse_error
{
public:
  unknown_line_error( std::string const& what, std::size_t line, std::size_t column )
      : parse_error( what, line, column )
  {
  }
};

/*! \brief A truth table does not have exactly 2^n rows. */
class row_count_error : public parse_error
{
public:
  row_count_error( std::string const& what, std::size_t line, std::size_t column )
      : parse_error( what, line, column )
  {
  }
};

} // namespace revsynth
