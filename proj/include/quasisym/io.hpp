#pragma once

#include "quasisym/game.hpp"
#include "quasisym/perm.hpp"
#include "quasisym/rational.hpp"
#include "quasisym/value.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quasisym {

/// Whole file contents; throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);

/// "1,3" for {player 0, player 2}; "0" for the empty coalition.
std::string coalition_label(Mask m);
/// Inverse of coalition_label; throws ParseError on bad or out-of-range
/// members.
Mask parse_members(std::string_view text, int n);

/// Group file: `n=<count>` followed by one generator per line in cycle
/// notation. Blank lines and lines starting with '#' are skipped.
PermGroup parse_group(std::string_view text);

/// Game file: `n=<count>` then `<members> <value>` lines; unlisted
/// coalitions are 0.
Game parse_game(std::string_view text);

/// Tab-separated matrix: a header row `i` + coalition labels in increasing
/// mask order, then one row per player (1-indexed label first).
std::string format_matrix(const ValueMatrix& m);
/// Inverse of format_matrix. '#' lines and blank lines are ignored.
ValueMatrix parse_matrix(std::string_view text);

/// One line per player: `<player>\t<payoff>`.
std::string format_allocation(const Allocation& x);

/// Coset weight file: `<representative in cycle notation> <p/q>` per line.
std::vector<std::pair<Permutation, Rational>> parse_coset_weights(std::string_view text, int n);

} // namespace quasisym
