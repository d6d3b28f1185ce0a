#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dkdv/laurent.hpp"
#include "dkdv/mapping.hpp"
#include "dkdv/projective.hpp"

namespace dkdv {

/// One step of a height-1 staircase: width+1 cells on one row, read left to
/// right. A zero mark means the cell carries the seeded eps instead of its
/// (ignored) value.
struct StaircaseStep {
    int width = 1;
    std::vector<Rational> values;
    std::vector<bool> zero_marks;
};

/// Initial data on a monotone staircase of uniform height 1 and varying step
/// widths. Step j occupies row anchor_m - j; its first column is the last
/// column of the step above, so consecutive steps share a column (not a cell)
/// and the path drops one row per step.
struct Staircase {
    int anchor_m = 0;
    int anchor_n = 0;
    std::vector<StaircaseStep> steps;

    struct Cell {
        int m, n;
        Rational value;
        bool zero;
    };

    std::vector<Cell> cells() const;
    bool has_zero() const;
    void validate() const;
};

/// Periodic width-q staircase carrying the state (u_1, ..., u_{q+1}) on every
/// step; zero_pos (1-based) seeds that position of each step with eps.
Staircase make_periodic_staircase(int q, const std::vector<Rational>& values, int n_steps,
                                  int anchor_m = 0, int anchor_n = 0,
                                  std::optional<int> zero_pos = std::nullopt);

struct Window {
    int m_min = 0, m_max = 0, n_min = 0, n_max = 0;
    bool contains(int m, int n) const {
        return m >= m_min && m <= m_max && n >= n_min && n <= n_max;
    }
};

/// Bounding box of the staircase expanded by 3x the maximal step width.
Window default_window(const Staircase& staircase);

enum class Direction { NE, SW, Both };

using CellKey = std::pair<int, int>;  // (m, n)

struct LatticeGridQ {
    std::map<CellKey, LaurentQ> cells;  // computed cells only
    std::set<CellKey> staircase_cells;
    Window window;
};

struct LatticeGridP {
    std::map<CellKey, Projective> cells;
    std::set<CellKey> staircase_cells;
    Window window;
};

/// Fills every window cell whose stencil is determined, sweeping
/// anti-diagonals in dependency order. Laurent mode seeds all zero marks with
/// one shared eps and raises the truncation adaptively.
LatticeGridQ evolve_laurent(const Staircase& staircase, const MapParams& params, Direction dir,
                            const Window& window, long truncation = 0);

/// Pure projective evolution; throws IndeterminateStep when the data hits an
/// indeterminate form (rerun with eps seeding, i.e. Laurent mode, instead).
LatticeGridP evolve_projective(const Staircase& staircase, const MapParams& params, Direction dir,
                               const Window& window);

const LaurentQ& cell(const LatticeGridQ& grid, int m, int n);     // throws WindowUndetermined
const Projective& cell(const LatticeGridP& grid, int m, int n);   // throws WindowUndetermined

/// Sparse map of singular marks plus provenance. Regular computed cells are
/// elided from `marks`; seeded zeros on the staircase are marked ZeroLike.
struct PatternMap {
    std::map<CellKey, EntrySignature> marks;
    std::set<CellKey> staircase_cells;
    std::set<CellKey> computed_cells;
    Window window;
    std::string params_a, params_b;  // provenance echo
};

PatternMap pattern_of(const LatticeGridQ& grid, const Staircase& staircase,
                      const MapParams& params);
PatternMap pattern_of(const LatticeGridP& grid, const Staircase& staircase,
                      const MapParams& params);

/// Laurent mode automatically when the staircase carries zeros, projective
/// otherwise; Direction::Both merges NE and SW marks into one map.
PatternMap evolve(const Staircase& staircase, const MapParams& params,
                  Direction dir = Direction::Both, const Window* window = nullptr);

/// Pairwise interaction labels for zeros on distinct staircase steps. Zeros
/// on adjacent steps fall into the five canonical cases; everything else is
/// NoInteraction. Two zeros on one step are rejected (SameStepUnsupported).
struct InteractionCase {
    int upper_step = 0;
    int lower_step = 0;
    std::string label;  // "Case1".."Case5" or "NoInteraction"
};

std::vector<InteractionCase> classify_interaction(const Staircase& staircase,
                                                  const MapParams& params);

struct GlyphSet {
    char zero = '0';
    char inf = '8';
    char regular = '.';
    char initial = 'u';
    char empty = ' ';
};

std::string render_ascii(const PatternMap& map, const GlyphSet& glyphs = {});
std::string render_json(const PatternMap& map, const Staircase& staircase,
                        const std::vector<InteractionCase>& cases = {});
std::string render_svg(const PatternMap& map);

}  // namespace dkdv
