#include "revsynth/io.hpp"

#include <cctype>
#include <optional>
#include <string_view>

#include "revsynth/errors.hpp"

namespace revsynth
{

namespace
{

/*! \brief Character stream with 1-based line/column tracking for diagnostics. */
struct cursor
{
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t line_offset = 0; //!< added to reported line numbers (file sections)

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance()
  {
    if ( text[pos] == '\n' )
    {
      ++line;
      column = 1;
    }
    else
    {
      ++column;
    }
    ++pos;
  }

  void skip_blank()
  {
    while ( !eof() )
    {
      char const c = peek();
      if ( c == '#' )
      {
        while ( !eof() && peek() != '\n' )
        {
          advance();
        }
      }
      else if ( std::isspace( static_cast<unsigned char>( c ) ) )
      {
        advance();
      }
      else
      {
        break;
      }
    }
  }

  [[noreturn]] void fail( std::string const& what ) const
  {
    throw parse_error( what, line + line_offset, column );
  }

  /*! \brief Word of letters, underscores and dots (directives, keywords). */
  std::string word()
  {
    skip_blank();
    std::string out;
    while ( !eof() )
    {
      char const c = peek();
      if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' || c == '.' )
      {
        out.push_back( c );
        advance();
      }
      else
      {
        break;
      }
    }
    return out;
  }

  uint64_t number( char const* what )
  {
    skip_blank();
    if ( eof() || !std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      fail( std::string( "expected " ) + what );
    }
    uint64_t value = 0;
    while ( !eof() && std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      value = value * 10u + static_cast<uint64_t>( peek() - '0' );
      if ( value > uint64_t{ 1 } << 40 )
      {
        fail( std::string( what ) + " is out of range" );
      }
      advance();
    }
    return value;
  }
};

} // namespace

reversible_spec parse_spec( std::string const& text )
{
  cursor cur{ text };
  if ( cur.word() != "n" )
  {
    cur.fail( "expected 'n <line count>'" );
  }
  uint64_t const width = cur.number( "line count" );
  if ( width < 1u || width > max_width )
  {
    cur.fail( "line count must be within 1.." + std::to_string( max_width ) );
  }
  if ( cur.word() != "perm" )
  {
    cur.fail( "expected 'perm <output rows>'" );
  }
  std::size_t const rows = std::size_t{ 1 } << width;
  std::vector<uint32_t> perm;
  perm.reserve( rows );
  for ( std::size_t i = 0; i < rows; ++i )
  {
    uint64_t const value = cur.number( "permutation entry" );
    if ( value >= rows )
    {
      cur.fail( "permutation entry " + std::to_string( value ) + " does not fit into " + std::to_string( width ) + " lines" );
    }
    perm.push_back( static_cast<uint32_t>( value ) );
  }
  cur.skip_blank();
  if ( !cur.eof() )
  {
    cur.fail( "unexpected trailing input" );
  }
  return reversible_spec( static_cast<unsigned>( width ), std::move( perm ) );
}

std::string format_spec( reversible_spec const& spec )
{
  std::string out = "n " + std::to_string( spec.width() ) + "\nperm";
  for ( uint32_t i = 0; i < spec.size(); ++i )
  {
    out += ' ';
    out += std::to_string( spec[i] );
  }
  out += '\n';
  return out;
}

namespace
{

struct raw_operand
{
  unsigned line_index;
  bool negative;
  std::size_t src_line;
  std::size_t src_column;
};

struct raw_gate
{
  std::vector<raw_operand> controls;
  raw_operand target;
};

struct raw_gate_list
{
  std::optional<unsigned> declared_lines;
  unsigned highest_line = 0;
  bool any_gate = false;
  std::vector<raw_gate> gates;
};

raw_operand parse_operand( cursor& cur )
{
  char const c = cur.peek();
  std::size_t const src_line = cur.line + cur.line_offset;
  std::size_t const src_column = cur.column;
  if ( c < 'a' || c >= static_cast<char>( 'a' + max_width ) )
  {
    cur.fail( "expected a line letter a.." + std::string( 1, static_cast<char>( 'a' + max_width - 1 ) ) );
  }
  cur.advance();
  bool negative = false;
  if ( !cur.eof() && cur.peek() == '\'' )
  {
    negative = true;
    cur.advance();
  }
  return raw_operand{ static_cast<unsigned>( c - 'a' ), negative, src_line, src_column };
}

raw_gate parse_raw_gate( cursor& cur )
{
  // caller verified the leading 'T'
  cur.advance();
  cur.skip_blank();
  if ( cur.eof() || cur.peek() != '(' )
  {
    cur.fail( "expected '(' after gate name" );
  }
  cur.advance();

  std::vector<raw_operand> operands;
  std::optional<std::size_t> separator_at;
  enum class expect
  {
    operand_or_separator,
    delimiter,
    operand,
    target,
    close
  };
  expect state = expect::operand_or_separator;
  for ( ;; )
  {
    cur.skip_blank();
    if ( cur.eof() )
    {
      cur.fail( "unterminated gate; expected ')'" );
    }
    char const c = cur.peek();
    if ( c == ')' )
    {
      if ( state != expect::delimiter && state != expect::close )
      {
        cur.fail( "expected a line before ')'" );
      }
      cur.advance();
      break;
    }
    switch ( state )
    {
    case expect::operand_or_separator:
      if ( c == ':' || c == ';' )
      {
        separator_at = operands.size();
        cur.advance();
        state = expect::target;
      }
      else
      {
        operands.push_back( parse_operand( cur ) );
        state = expect::delimiter;
      }
      break;
    case expect::delimiter:
      if ( c == ',' )
      {
        cur.advance();
        state = expect::operand;
      }
      else if ( c == ':' || c == ';' )
      {
        if ( separator_at )
        {
          cur.fail( "a gate has exactly one target separator" );
        }
        separator_at = operands.size();
        cur.advance();
        state = expect::target;
      }
      else
      {
        cur.fail( "expected ',', ':' or ')'" );
      }
      break;
    case expect::operand:
      operands.push_back( parse_operand( cur ) );
      state = expect::delimiter;
      break;
    case expect::target:
      operands.push_back( parse_operand( cur ) );
      state = expect::close;
      break;
    case expect::close:
      cur.fail( "expected ')' after the target line" );
    }
  }

  raw_gate gate;
  if ( separator_at )
  {
    if ( operands.size() != *separator_at + 1u )
    {
      cur.fail( "expected exactly one target line" );
    }
    gate.target = operands.back();
    gate.controls.assign( operands.begin(), operands.end() - 1 );
  }
  else
  {
    if ( operands.size() != 1u )
    {
      cur.fail( "missing ':' before the target line" );
    }
    gate.target = operands.front();
  }
  if ( gate.target.negative )
  {
    throw parse_error( "the target line cannot carry a polarity mark", gate.target.src_line, gate.target.src_column );
  }
  for ( auto const& control : gate.controls )
  {
    if ( control.line_index == gate.target.line_index )
    {
      throw self_control_error( std::string( "gate controls its own target line " ) + line_name( gate.target.line_index ),
                                gate.target.src_line, gate.target.src_column );
    }
  }
  return gate;
}

raw_gate_list parse_raw_gates( cursor& cur )
{
  raw_gate_list out;
  cur.skip_blank();
  if ( !cur.eof() && cur.peek() == '.' )
  {
    std::size_t const dir_line = cur.line + cur.line_offset;
    std::size_t const dir_column = cur.column;
    std::string const directive = cur.word();
    if ( directive != ".lines" )
    {
      throw parse_error( "unknown directive '" + directive + "'", dir_line, dir_column );
    }
    uint64_t const declared = cur.number( "line count after .lines" );
    if ( declared < 1u || declared > max_width )
    {
      cur.fail( "line count must be within 1.." + std::to_string( max_width ) );
    }
    out.declared_lines = static_cast<unsigned>( declared );
  }
  for ( ;; )
  {
    cur.skip_blank();
    if ( cur.eof() )
    {
      break;
    }
    char const c = cur.peek();
    if ( c != 'T' && c != 't' )
    {
      cur.fail( "expected a gate 'T(...)'" );
    }
    raw_gate gate = parse_raw_gate( cur );
    out.highest_line = std::max( out.highest_line, gate.target.line_index );
    for ( auto const& control : gate.controls )
    {
      out.highest_line = std::max( out.highest_line, control.line_index );
    }
    out.any_gate = true;
    out.gates.push_back( std::move( gate ) );
  }
  return out;
}

circuit build_circuit( raw_gate_list const& raw, unsigned width )
{
  circuit out( width );
  for ( auto const& gate : raw.gates )
  {
    uint32_t pos = 0u, neg = 0u;
    for ( auto const& control : gate.controls )
    {
      if ( control.line_index >= width )
      {
        throw unknown_line_error( std::string( "line " ) + line_name( control.line_index ) + " is outside the " + std::to_string( width ) + " declared lines",
                                  control.src_line, control.src_column );
      }
      uint32_t const bit = uint32_t{ 1 } << control.line_index;
      if ( ( pos | neg ) & bit )
      {
        throw parse_error( std::string( "line " ) + line_name( control.line_index ) + " is listed twice",
                           control.src_line, control.src_column );
      }
      ( control.negative ? neg : pos ) |= bit;
    }
    if ( gate.target.line_index >= width )
    {
      throw unknown_line_error( std::string( "line " ) + line_name( gate.target.line_index ) + " is outside the " + std::to_string( width ) + " declared lines",
                                gate.target.src_line, gate.target.src_column );
    }
    out.add( toffoli_gate( width, gate.target.line_index, pos, neg ) );
  }
  return out;
}

unsigned decide_width( raw_gate_list const& raw, cursor const& cur )
{
  if ( raw.declared_lines )
  {
    return *raw.declared_lines;
  }
  if ( !raw.any_gate )
  {
    throw parse_error( "cannot infer the line count of an empty gate list; add a .lines directive",
                       cur.line + cur.line_offset, cur.column );
  }
  return raw.highest_line + 1u;
}

} // namespace

circuit parse_circuit( std::string const& text )
{
  cursor cur{ text };
  raw_gate_list const raw = parse_raw_gates( cur );
  return build_circuit( raw, decide_width( raw, cur ) );
}

std::string format_gate( toffoli_gate const& gate )
{
  std::string out = "T(";
  bool first = true;
  for ( unsigned line = 0; line < gate.width(); ++line )
  {
    uint32_t const bit = uint32_t{ 1 } << line;
    if ( ( ( gate.positive_controls() | gate.negative_controls() ) & bit ) == 0u )
    {
      continue;
    }
    if ( !first )
    {
      out.push_back( ',' );
    }
    out.push_back( line_name( line ) );
    if ( gate.negative_controls() & bit )
    {
      out.push_back( '\'' );
    }
    first = false;
  }
  out.push_back( ':' );
  out.push_back( line_name( gate.target() ) );
  out.push_back( ')' );
  return out;
}

std::string format_circuit( circuit const& c )
{
  std::string out = ".lines " + std::to_string( c.width() ) + "\n";
  for ( auto const& gate : c )
  {
    out += format_gate( gate );
    out.push_back( '\n' );
  }
  return out;
}

irreversible_table parse_table( std::string const& text )
{
  cursor cur{ text };
  std::optional<unsigned> inputs;
  std::optional<unsigned> outputs;
  std::vector<uint32_t> rows;
  for ( ;; )
  {
    cur.skip_blank();
    if ( cur.eof() )
    {
      break;
    }
    char const c = cur.peek();
    if ( c == '.' )
    {
      std::size_t const dir_line = cur.line;
      std::size_t const dir_column = cur.column;
      std::string const directive = cur.word();
      if ( directive != ".inputs" && directive != ".outputs" )
      {
        throw parse_error( "unknown directive '" + directive + "'", dir_line, dir_column );
      }
      if ( !rows.empty() )
      {
        throw parse_error( "directives must precede the rows", dir_line, dir_column );
      }
      uint64_t const value = cur.number( "count after the directive" );
      if ( value < 1u || value > max_width )
      {
        cur.fail( "count must be within 1.." + std::to_string( max_width ) );
      }
      ( directive == ".inputs" ? inputs : outputs ) = static_cast<unsigned>( value );
    }
    else if ( c == '0' || c == '1' )
    {
      if ( !inputs || !outputs )
      {
        cur.fail( "rows must follow the .inputs and .outputs directives" );
      }
      if ( rows.size() >= std::size_t{ 1 } << *inputs )
      {
        throw row_count_error( "more rows than the " + std::to_string( std::size_t{ 1 } << *inputs ) + " input assignments",
                               cur.line, cur.column );
      }
      uint32_t value = 0;
      for ( unsigned bit = 0; bit < *outputs; ++bit )
      {
        if ( cur.eof() || ( cur.peek() != '0' && cur.peek() != '1' ) )
        {
          cur.fail( "a row needs exactly " + std::to_string( *outputs ) + " binary digits" );
        }
        value = ( value << 1 ) | ( cur.peek() == '1' ? 1u : 0u );
        cur.advance();
      }
      if ( !cur.eof() && ( cur.peek() == '0' || cur.peek() == '1' ) )
      {
        cur.fail( "a row needs exactly " + std::to_string( *outputs ) + " binary digits" );
      }
      rows.push_back( value );
    }
    else
    {
      cur.fail( "expected a directive or a row of binary digits" );
    }
  }
  if ( !inputs || !outputs )
  {
    cur.fail( "missing .inputs or .outputs directive" );
  }
  if ( rows.size() != std::size_t{ 1 } << *inputs )
  {
    throw row_count_error( "expected " + std::to_string( std::size_t{ 1 } << *inputs ) + " rows, got " + std::to_string( rows.size() ),
                           cur.line, cur.column );
  }
  return irreversible_table( *inputs, *outputs, std::move( rows ) );
}

std::string format_table( irreversible_table const& table )
{
  std::string out = ".inputs " + std::to_string( table.inputs ) + "\n.outputs " + std::to_string( table.outputs ) + "\n";
  for ( auto row : table.rows )
  {
    for ( unsigned bit = table.outputs; bit-- > 0; )
    {
      out.push_back( ( ( row >> bit ) & 1u ) ? '1' : '0' );
    }
    out.push_back( '\n' );
  }
  return out;
}

template_rule parse_template( std::string const& text, std::string name )
{
  // split on the first line containing only "=>"
  std::size_t search_from = 0;
  std::size_t separator_line = 0;
  std::optional<std::size_t> split_begin;
  std::size_t split_end = 0;
  std::size_t line_number = 1;
  while ( search_from <= text.size() )
  {
    std::size_t const line_end = std::min( text.find( '\n', search_from ), text.size() );
    std::string_view line( text.data() + search_from, line_end - search_from );
    while ( !line.empty() && std::isspace( static_cast<unsigned char>( line.front() ) ) )
    {
      line.remove_prefix( 1 );
    }
    while ( !line.empty() && std::isspace( static_cast<unsigned char>( line.back() ) ) )
    {
      line.remove_suffix( 1 );
    }
    if ( line == "=>" )
    {
      split_begin = search_from;
      split_end = line_end;
      separator_line = line_number;
      break;
    }
    if ( line_end == text.size() )
    {
      break;
    }
    search_from = line_end + 1;
    ++line_number;
  }
  if ( !split_begin )
  {
    throw parse_error( "missing '=>' separator between pattern and replacement", line_number, 1 );
  }

  cursor pattern_cur{ std::string_view( text.data(), *split_begin ) };
  raw_gate_list const pattern_raw = parse_raw_gates( pattern_cur );

  cursor replacement_cur{ std::string_view( text.data() + split_end, text.size() - split_end ) };
  replacement_cur.line_offset = separator_line - 1;
  raw_gate_list const replacement_raw = parse_raw_gates( replacement_cur );

  if ( !pattern_raw.any_gate && !pattern_raw.declared_lines )
  {
    throw parse_error( "the pattern section is empty", 1, 1 );
  }
  unsigned width = 0;
  for ( auto const& raw : { pattern_raw, replacement_raw } )
  {
    width = std::max( width, raw.declared_lines.value_or( 0u ) );
    if ( raw.any_gate )
    {
      width = std::max( width, raw.highest_line + 1u );
    }
  }
  return make_template( std::move( name ),
                        build_circuit( pattern_raw, width ),
                        build_circuit( replacement_raw, width ) );
}

} // namespace revsynth
