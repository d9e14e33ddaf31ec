#include "revsynth/optimizer.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <iostream>
#include <utility>

#include "revsynth/errors.hpp"
#include "revsynth/simulator.hpp"
#include "revsynth/spec.hpp"

namespace revsynth
{

optimize_config::optimize_config()
    : templates( built_in_templates() )
{
}

bool gates_commute( toffoli_gate const& g, toffoli_gate const& h )
{
  if ( g.width() != h.width() )
  {
    throw width_mismatch( "commutation test needs equal widths, got " + std::to_string( g.width() ) + " and " + std::to_string( h.width() ) );
  }
  bool const g_target_controlled = ( h.control_lines() >> g.target() ) & 1u;
  bool const h_target_controlled = ( g.control_lines() >> h.target() ) & 1u;
  return !g_target_controlled && !h_target_controlled;
}

circuit remove_useless_pairs( circuit const& c )
{
  std::vector<toffoli_gate> gates = c.gates();
  bool changed = true;
  while ( changed )
  {
    changed = false;
    for ( std::size_t i = 0; i + 1 < gates.size() && !changed; ++i )
    {
      for ( std::size_t j = i + 1; j < gates.size() && !changed; ++j )
      {
        if ( gates[i] != gates[j] )
        {
          continue;
        }
        bool bridged = true;
        for ( std::size_t u = i + 1; u < j && bridged; ++u )
        {
          bridged = gates_commute( gates[i], gates[u] );
        }
        if ( !bridged )
        {
          continue;
        }
        gates.erase( gates.begin() + static_cast<std::ptrdiff_t>( j ) );
        gates.erase( gates.begin() + static_cast<std::ptrdiff_t>( i ) );
        changed = true;
      }
    }
  }
  return circuit( c.width(), std::move( gates ) );
}

std::optional<toffoli_gate> merge_adjacent( toffoli_gate const& g, toffoli_gate const& h )
{
  if ( g.width() != h.width() )
  {
    throw width_mismatch( "merge test needs equal widths, got " + std::to_string( g.width() ) + " and " + std::to_string( h.width() ) );
  }
  if ( g.target() != h.target() || g.control_lines() != h.control_lines() )
  {
    return std::nullopt;
  }
  uint32_t const flipped = g.positive_controls() ^ h.positive_controls();
  if ( std::popcount( flipped ) != 1 )
  {
    return std::nullopt;
  }
  return g.without_control( static_cast<unsigned>( std::countr_zero( flipped ) ) );
}

circuit merge_adjacent_pass( circuit const& c )
{
  std::vector<toffoli_gate> gates = c.gates();
  bool changed = true;
  while ( changed )
  {
    changed = false;
    for ( std::size_t i = 0; i + 1 < gates.size(); ++i )
    {
      if ( auto merged = merge_adjacent( gates[i], gates[i + 1] ) )
      {
        gates[i] = *merged;
        gates.erase( gates.begin() + static_cast<std::ptrdiff_t>( i ) + 1 );
        changed = true;
        break;
      }
    }
  }
  return circuit( c.width(), std::move( gates ) );
}

bool validate_template( template_rule const& rule )
{
  if ( rule.pattern.width() > template_arity_limit )
  {
    throw arity_error( "template '" + rule.name + "' has arity " + std::to_string( rule.pattern.width() ) + ", above the limit " + std::to_string( template_arity_limit ) );
  }
  if ( rule.replacement.width() != rule.pattern.width() )
  {
    return false;
  }
  return realized_spec( rule.pattern ) == realized_spec( rule.replacement );
}

namespace
{

uint32_t used_lines( circuit const& c )
{
  uint32_t mask = 0;
  for ( auto const& g : c )
  {
    mask |= g.control_lines() | ( uint32_t{ 1 } << g.target() );
  }
  return mask;
}

} // namespace

template_rule make_template( std::string name, circuit pattern, circuit replacement )
{
  template_rule rule{ std::move( name ), std::move( pattern ), std::move( replacement ) };
  if ( rule.replacement.width() != rule.pattern.width() )
  {
    throw error( "template '" + rule.name + "': pattern and replacement widths differ" );
  }
  if ( rule.replacement.size() >= rule.pattern.size() )
  {
    throw error( "template '" + rule.name + "': replacement must be strictly shorter than the pattern" );
  }
  if ( ( used_lines( rule.replacement ) & ~used_lines( rule.pattern ) ) != 0u )
  {
    throw error( "template '" + rule.name + "': replacement uses a line the pattern never touches" );
  }
  if ( !validate_template( rule ) )
  {
    throw error( "template '" + rule.name + "': pattern and replacement are not equivalent" );
  }
  return rule;
}

std::vector<template_rule> const& built_in_templates()
{
  static std::vector<template_rule> const rules = []
  {
    auto gate = []( unsigned width, unsigned target, std::initializer_list<unsigned> pos, std::initializer_list<unsigned> neg )
    {
      return toffoli_gate::from_lines( width, target, pos, neg );
    };
    std::vector<template_rule> out;

    out.push_back( make_template( "not-pair",
                                  circuit( 1, { gate( 1, 0, {}, {} ), gate( 1, 0, {}, {} ) } ),
                                  circuit( 1, {} ) ) );
    out.push_back( make_template( "cnot-pair",
                                  circuit( 2, { gate( 2, 1, { 0 }, {} ), gate( 2, 1, { 0 }, {} ) } ),
                                  circuit( 2, {} ) ) );
    out.push_back( make_template( "cnot-pair-negative",
                                  circuit( 2, { gate( 2, 1, {}, { 0 } ), gate( 2, 1, {}, { 0 } ) } ),
                                  circuit( 2, {} ) ) );
    out.push_back( make_template( "toffoli-pair",
                                  circuit( 3, { gate( 3, 2, { 0, 1 }, {} ), gate( 3, 2, { 0, 1 }, {} ) } ),
                                  circuit( 3, {} ) ) );
    out.push_back( make_template( "polarity-merge-cnot",
                                  circuit( 2, { gate( 2, 1, { 0 }, {} ), gate( 2, 1, {}, { 0 } ) } ),
                                  circuit( 2, { gate( 2, 1, {}, {} ) } ) ) );
    out.push_back( make_template( "polarity-merge-toffoli",
                                  circuit( 3, { gate( 3, 2, { 0, 1 }, {} ), gate( 3, 2, { 1 }, { 0 } ) } ),
                                  circuit( 3, { gate( 3, 2, { 1 }, {} ) } ) ) );
    out.push_back( make_template( "not-conjugate-positive",
                                  circuit( 2, { gate( 2, 0, {}, {} ), gate( 2, 1, { 0 }, {} ), gate( 2, 0, {}, {} ) } ),
                                  circuit( 2, { gate( 2, 1, {}, { 0 } ) } ) ) );
    out.push_back( make_template( "not-conjugate-negative",
                                  circuit( 2, { gate( 2, 0, {}, {} ), gate( 2, 1, {}, { 0 } ), gate( 2, 0, {}, {} ) } ),
                                  circuit( 2, { gate( 2, 1, { 0 }, {} ) } ) ) );
    out.push_back( make_template( "not-conjugate-toffoli",
                                  circuit( 3, { gate( 3, 0, {}, {} ), gate( 3, 2, { 0, 1 }, {} ), gate( 3, 0, {}, {} ) } ),
                                  circuit( 3, { gate( 3, 2, { 1 }, { 0 } ) } ) ) );
    return out;
  }();
  return rules;
}

namespace
{

/*! \brief Backtracking search for one occurrence of a pattern in a circuit.
 *
 * Pattern gates are matched left to right at strictly increasing host
 * indices; host gates passed over inside the window are "skipped" and must
 * commute with every matched gate to their right, so that the matched gates
 * can slide together into one contiguous block.  Abstract lines are bound
 * to host lines injectively, preserving control polarity.
 */
class pattern_matcher
{
public:
  pattern_matcher( circuit const& host, circuit const& pattern )
      : host_( host ), pattern_( pattern )
  {
  }

  bool find_at( std::size_t anchor )
  {
    to_host_.fill( -1 );
    to_abstract_.fill( -1 );
    trail_.clear();
    matched_.clear();
    skipped_.clear();
    if ( anchor + pattern_.size() > host_.size() )
    {
      return false;
    }
    return try_gate( 0, anchor );
  }

  std::vector<std::size_t> const& matched() const { return matched_; }
  std::vector<std::size_t> const& skipped() const { return skipped_; }

  unsigned host_line( unsigned abstract_line ) const
  {
    return static_cast<unsigned>( to_host_[abstract_line] );
  }

private:
  bool search( unsigned k, std::size_t from )
  {
    std::size_t const skip_mark = skipped_.size();
    for ( std::size_t j = from; j + ( pattern_.size() - k ) <= host_.size(); ++j )
    {
      if ( commutes_with_skipped( j ) && try_gate( k, j ) )
      {
        return true;
      }
      skipped_.push_back( j );
    }
    skipped_.resize( skip_mark );
    return false;
  }

  bool commutes_with_skipped( std::size_t j ) const
  {
    for ( auto u : skipped_ )
    {
      if ( !gates_commute( host_[u], host_[j] ) )
      {
        return false;
      }
    }
    return true;
  }

  bool try_gate( unsigned k, std::size_t j )
  {
    toffoli_gate const& pg = pattern_[k];
    toffoli_gate const& hg = host_[j];
    if ( std::popcount( pg.positive_controls() ) != std::popcount( hg.positive_controls() )
         || std::popcount( pg.negative_controls() ) != std::popcount( hg.negative_controls() ) )
    {
      return false;
    }
    std::size_t const mark = trail_.size();
    if ( !bind( pg.target(), hg.target() ) )
    {
      undo_to( mark );
      return false;
    }
    matched_.push_back( j );
    auto const matched_rest = [&]
    {
      return k + 1 == pattern_.size() ? true : search( k + 1, j + 1 );
    };
    auto const matched_negatives = [&]
    {
      return assign_controls( pg.negative_controls(), hg.negative_controls(), matched_rest );
    };
    if ( assign_controls( pg.positive_controls(), hg.positive_controls(), matched_negatives ) )
    {
      return true;
    }
    matched_.pop_back();
    undo_to( mark );
    return false;
  }

  /*! \brief Bind every abstract line in \p abstract_mask to a distinct host
   * line in \p host_mask, trying the continuation for each assignment. */
  bool assign_controls( uint32_t abstract_mask, uint32_t host_mask, std::function<bool()> const& cont )
  {
    if ( abstract_mask == 0u )
    {
      return cont();
    }
    unsigned const abstract_line = static_cast<unsigned>( std::countr_zero( abstract_mask ) );
    uint32_t const rest = abstract_mask & ( abstract_mask - 1u );
    if ( to_host_[abstract_line] >= 0 )
    {
      if ( ( ( host_mask >> to_host_[abstract_line] ) & 1u ) == 0u )
      {
        return false;
      }
      return assign_controls( rest, host_mask, cont );
    }
    for ( unsigned h = 0; h < host_.width(); ++h )
    {
      if ( ( ( host_mask >> h ) & 1u ) == 0u || to_abstract_[h] >= 0 )
      {
        continue;
      }
      std::size_t const mark = trail_.size();
      bind_free( abstract_line, h );
      if ( assign_controls( rest, host_mask, cont ) )
      {
        return true;
      }
      undo_to( mark );
    }
    return false;
  }

  bool bind( unsigned abstract_line, unsigned host_line )
  {
    if ( to_host_[abstract_line] >= 0 )
    {
      return to_host_[abstract_line] == static_cast<int>( host_line );
    }
    if ( to_abstract_[host_line] >= 0 )
    {
      return false;
    }
    bind_free( abstract_line, host_line );
    return true;
  }

  void bind_free( unsigned abstract_line, unsigned host_line )
  {
    to_host_[abstract_line] = static_cast<int>( host_line );
    to_abstract_[host_line] = static_cast<int>( abstract_line );
    trail_.push_back( abstract_line );
  }

  void undo_to( std::size_t mark )
  {
    while ( trail_.size() > mark )
    {
      unsigned const abstract_line = trail_.back();
      trail_.pop_back();
      to_abstract_[to_host_[abstract_line]] = -1;
      to_host_[abstract_line] = -1;
    }
  }

  circuit const& host_;
  circuit const& pattern_;
  std::array<int, max_width> to_host_{};
  std::array<int, max_width> to_abstract_{};
  std::vector<unsigned> trail_;
  std::vector<std::size_t> matched_;
  std::vector<std::size_t> skipped_;
};

/*! \brief Splice a matched rule instance: prefix, mapped replacement, the
 * skipped gates in their original order, suffix. */
circuit substituted( circuit const& host, template_rule const& rule, pattern_matcher const& m )
{
  circuit out( host.width() );
  std::size_t const anchor = m.matched().front();
  std::size_t const last = m.matched().back();
  for ( std::size_t i = 0; i < anchor; ++i )
  {
    out.add( host[i] );
  }
  for ( auto const& g : rule.replacement )
  {
    uint32_t pos = 0u, neg = 0u;
    for ( unsigned line = 0; line < rule.replacement.width(); ++line )
    {
      if ( ( g.positive_controls() >> line ) & 1u )
      {
        pos |= uint32_t{ 1 } << m.host_line( line );
      }
      if ( ( g.negative_controls() >> line ) & 1u )
      {
        neg |= uint32_t{ 1 } << m.host_line( line );
      }
    }
    out.add( toffoli_gate( host.width(), m.host_line( g.target() ), pos, neg ) );
  }
  for ( auto u : m.skipped() )
  {
    out.add( host[u] );
  }
  for ( std::size_t i = last + 1; i < host.size(); ++i )
  {
    out.add( host[i] );
  }
  return out;
}

} // namespace

circuit apply_templates( circuit const& c, std::vector<template_rule> const& templates )
{
  circuit current = c;
  bool changed = true;
  while ( changed ) // terminates: every substitution strictly shrinks the circuit
  {
    changed = false;
    for ( auto const& rule : templates )
    {
      pattern_matcher matcher( current, rule.pattern );
      for ( std::size_t anchor = 0; anchor + rule.pattern.size() <= current.size(); ++anchor )
      {
        if ( matcher.find_at( anchor ) )
        {
          current = substituted( current, rule, matcher );
          changed = true;
          break;
        }
      }
      if ( changed )
      {
        break;
      }
    }
  }
  return current;
}

circuit prune_conjugated_controls( circuit const& c )
{
  std::vector<toffoli_gate> gates = c.gates();
  bool changed = true;
  while ( changed )
  {
    changed = false;
    for ( std::size_t i = 0; i + 2 < gates.size() && !changed; ++i )
    {
      for ( std::size_t j = i + 2; j < gates.size() && !changed; ++j )
      {
        if ( gates[i] != gates[j] )
        {
          continue;
        }
        uint32_t shared_pos = gates[i].positive_controls();
        uint32_t shared_neg = gates[i].negative_controls();
        for ( std::size_t u = i + 1; u < j; ++u )
        {
          shared_pos &= gates[u].positive_controls();
          shared_neg &= gates[u].negative_controls();
        }
        uint32_t const droppable = shared_pos | shared_neg;
        if ( droppable == 0u )
        {
          continue;
        }
        unsigned const line = static_cast<unsigned>( std::countr_zero( droppable ) );
        gates[i] = gates[i].without_control( line );
        gates[j] = gates[j].without_control( line );
        changed = true;
      }
    }
  }
  return circuit( c.width(), std::move( gates ) );
}

circuit optimize( circuit const& c, optimize_config const& config )
{
  if ( config.max_passes < 1u )
  {
    throw value_error( "optimize needs max_passes >= 1" );
  }

  bool const check = c.width() <= equivalence_check_width_limit;
  if ( !check )
  {
    std::clog << "optimize: width " << c.width() << " is above " << equivalence_check_width_limit
              << "; skipping the exhaustive equivalence self-check\n";
  }

  circuit current = c;
  for ( unsigned pass = 0; pass < config.max_passes; ++pass )
  {
    circuit const before = current;
    if ( config.enable_pair_removal )
    {
      current = remove_useless_pairs( current );
    }
    if ( config.enable_merge )
    {
      current = merge_adjacent_pass( current );
    }
    if ( !config.templates.empty() )
    {
      current = apply_templates( current, config.templates );
    }
    if ( config.enable_control_pruning )
    {
      current = prune_conjugated_controls( current );
    }
    if ( current == before )
    {
      break;
    }
  }

  if ( check && !equivalent( current, c ) )
  {
    throw error( "optimizer produced a non-equivalent circuit; this is a bug" );
  }
  return current;
}

} // namespace revsynth
