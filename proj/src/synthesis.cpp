#include "revsynth/synthesis.hpp"

#include <bit>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "revsynth/errors.hpp"
#include "revsynth/rng.hpp"

namespace revsynth
{

sort_state::sort_state( reversible_spec const& spec )
    : width_( spec.width() ), slots_( spec.permutation() ), pos_( slots_.size() )
{
  for ( uint32_t i = 0; i < size(); ++i )
  {
    pos_[slots_[i]] = i;
  }
}

bool sort_state::sorted() const
{
  for ( uint32_t i = 0; i < size(); ++i )
  {
    if ( slots_[i] != i )
    {
      return false;
    }
  }
  return true;
}

void sort_state::apply( toffoli_gate const& gate )
{
  if ( gate.width() != width_ )
  {
    throw width_mismatch( "gate width " + std::to_string( gate.width() ) + " does not match sort state width " + std::to_string( width_ ) );
  }
  for ( uint32_t i = 0; i < size(); ++i )
  {
    slots_[i] = gate.apply( slots_[i] );
    pos_[slots_[i]] = i;
  }
}

toffoli_gate swap_gate( bit_string const& p, bit_string const& q )
{
  if ( p.width() != q.width() )
  {
    throw width_mismatch( "swap gate needs equal widths, got " + std::to_string( p.width() ) + " and " + std::to_string( q.width() ) );
  }
  uint32_t const diff = p.int_value() ^ q.int_value();
  if ( std::popcount( diff ) != 1 )
  {
    throw not_adjacent( "swap gate needs Hamming distance 1, got " + std::to_string( std::popcount( diff ) ) );
  }
  unsigned const target = static_cast<unsigned>( std::countr_zero( diff ) );
  uint32_t const line_mask = ( uint32_t{ 1 } << p.width() ) - 1u;
  uint32_t const others = line_mask & ~diff;
  uint32_t const pos = p.int_value() & others;
  uint32_t const neg = others & ~p.int_value();
  return toffoli_gate( p.width(), target, pos, neg );
}

bit_string chain_step( bit_string const& a, bit_string const& b, sort_state const& state, tie_rule rule )
{
  if ( a.width() != b.width() || a.width() != state.width() )
  {
    throw width_mismatch( "chain step needs one common width" );
  }
  uint32_t const diff = a.int_value() ^ b.int_value();
  if ( std::popcount( diff ) < 2 )
  {
    throw error( "chain step needs Hamming distance at least 2; swap directly instead" );
  }

  if ( rule == tie_rule::highest_value )
  {
    // Flip the most significant line on which a and b still disagree, so the
    // step agrees with the destination on the top lines.
    unsigned const top = static_cast<unsigned>( std::bit_width( diff ) ) - 1u;
    return b.with_flipped( top );
  }

  std::optional<uint32_t> best;
  std::optional<uint32_t> best_misplaced;
  for ( unsigned line = 0; line < a.width(); ++line )
  {
    if ( ( ( diff >> line ) & 1u ) == 0u )
    {
      continue;
    }
    uint32_t const candidate = b.int_value() ^ ( uint32_t{ 1 } << line );
    if ( !best || candidate < *best )
    {
      best = candidate;
    }
    if ( !state.placed( candidate ) && ( !best_misplaced || candidate < *best_misplaced ) )
    {
      best_misplaced = candidate;
    }
  }
  if ( rule == tie_rule::prefer_misplaced_then_lowest && best_misplaced )
  {
    return bit_string( *best_misplaced, a.width() );
  }
  return bit_string( *best, a.width() );
}

namespace
{

/*! \brief Complexity of the slot configuration after applying \p g. */
uint64_t cost_after( toffoli_gate const& g, sort_state const& state )
{
  uint64_t sum = 0;
  for ( uint32_t i = 0; i < state.size(); ++i )
  {
    sum += hamming_distance( g.apply( state.slot( i ) ), i );
  }
  return sum;
}

/*! \brief True iff \p g fixes every value that already sits in its own slot. */
bool fixes_placed_values( toffoli_gate const& g, sort_state const& state )
{
  for ( uint32_t v = 0; v < state.size(); ++v )
  {
    if ( state.position_of( v ) == v && g.apply( v ) != v )
    {
      return false;
    }
  }
  return true;
}

} // namespace

toffoli_gate reduce_controls( toffoli_gate const& gate, sort_state const& state )
{
  if ( gate.width() != state.width() )
  {
    throw width_mismatch( "gate width " + std::to_string( gate.width() ) + " does not match sort state width " + std::to_string( state.width() ) );
  }
  toffoli_gate current = gate;
  uint64_t current_cost = cost_after( current, state );
  for ( ;; )
  {
    std::optional<unsigned> best_line;
    uint64_t best_cost = 0;
    for ( unsigned line = 0; line < current.width(); ++line )
    {
      if ( ( ( current.control_lines() >> line ) & 1u ) == 0u )
      {
        continue;
      }
      toffoli_gate const candidate = current.without_control( line );
      if ( !fixes_placed_values( candidate, state ) )
      {
        continue;
      }
      uint64_t const cost = cost_after( candidate, state );
      if ( cost > current_cost )
      {
        continue;
      }
      if ( !best_line || cost < best_cost )
      {
        best_line = line;
        best_cost = cost;
      }
    }
    if ( !best_line )
    {
      return current;
    }
    current = current.without_control( *best_line );
    current_cost = best_cost;
  }
}

namespace
{

/*! \brief One synthesis run: owns the working state, the gate list and the
 * budget, and implements the three selection strategies. */
class sorter
{
public:
  sorter( reversible_spec const& spec, synthesis_options const& options )
      : state_( spec ), options_( options ), rng_( options.seed )
  {
    budget_ = options.max_gates != 0u
                  ? options.max_gates
                  : 4ull * spec.width() * ( uint64_t{ 1 } << spec.width() );
  }

  std::vector<toffoli_gate> run()
  {
    switch ( options_.method )
    {
    case synthesis_method::bsssn:
      run_lowest_slot();
      break;
    case synthesis_method::variant:
      run_value_scan();
      break;
    case synthesis_method::random:
      run_random();
      break;
    }
    return std::move( gates_ );
  }

private:
  /*! \brief Repeatedly place the value found in the lowest misplaced slot. */
  void run_lowest_slot()
  {
    for ( ;; )
    {
      uint32_t slot = 0;
      while ( slot < state_.size() && state_.slot( slot ) == slot )
      {
        ++slot;
      }
      if ( slot == state_.size() )
      {
        return;
      }
      place( state_.slot( slot ) );
    }
  }

  /*! \brief Scan target values upward, placing each misplaced one; repeat
   * whole passes until nothing moves any more (a chain can displace values
   * the scan already passed). */
  void run_value_scan()
  {
    while ( !state_.sorted() )
    {
      for ( uint32_t v = 0; v < state_.size(); ++v )
      {
        while ( state_.position_of( v ) != v )
        {
          place( v );
        }
      }
    }
  }

  /*! \brief Draw the next value to place uniformly among misplaced ones. */
  void run_random()
  {
    std::vector<uint32_t> misplaced;
    for ( ;; )
    {
      misplaced.clear();
      for ( uint32_t v = 0; v < state_.size(); ++v )
      {
        if ( state_.position_of( v ) != v )
        {
          misplaced.push_back( v );
        }
      }
      if ( misplaced.empty() )
      {
        return;
      }
      place( misplaced[rng_.next_below( misplaced.size() )] );
    }
  }

  /*! \brief Move value \p a_value into its own slot through a swap chain.
   *
   * Each step exchanges the current occupant of the destination slot with a
   * neighbour one line closer to \p a_value.  When control reduction rewrites
   * a step into a different gate, the chain's assumptions no longer hold, so
   * the placement returns early and the caller selects afresh.
   */
  void place( uint32_t a_value )
  {
    bit_string const a( a_value, state_.width() );
    for ( ;; )
    {
      uint32_t const b_value = state_.slot( a_value );
      if ( b_value == a_value )
      {
        return;
      }
      bit_string const b( b_value, state_.width() );
      bit_string const c = hamming_distance( a, b ) == 1u
                               ? a
                               : chain_step( a, b, state_, options_.tie );
      toffoli_gate const full = swap_gate( b, c );
      toffoli_gate const emitted = options_.reduce_controls ? reduce_controls( full, state_ ) : full;
      emit( emitted );
      state_.apply( emitted );
      if ( emitted != full )
      {
        return;
      }
    }
  }

  void emit( toffoli_gate const& g )
  {
    if ( gates_.size() >= budget_ )
    {
      throw gate_budget_exceeded( "synthesis exceeded the cap of " + std::to_string( budget_ ) + " gates" );
    }
    gates_.push_back( g );
  }

  sort_state state_;
  synthesis_options options_;
  splitmix64 rng_;
  uint64_t budget_;
  std::vector<toffoli_gate> gates_;
};

} // namespace

std::vector<toffoli_gate> sort_network( reversible_spec const& spec, synthesis_options const& options )
{
  sorter s( spec, options );
  return s.run();
}

circuit synthesize( reversible_spec const& spec, synthesis_options const& options )
{
  if ( options.side == translation_side::output )
  {
    auto const gates = sort_network( spec, options );
    circuit out( spec.width() );
    for ( auto it = gates.rbegin(); it != gates.rend(); ++it )
    {
      out.add( *it );
    }
    return out;
  }
  return circuit( spec.width(), sort_network( inverse( spec ), options ) );
}

} // namespace revsynth
