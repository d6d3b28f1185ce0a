#include "dkdv/lattice.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace dkdv {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kMaxDoublings = 8;

int step_start_column(const Staircase& s, std::size_t j) {
    int n = s.anchor_n;
    for (std::size_t i = 0; i < j; ++i) n += s.steps[i].width;
    return n;
}

template <class S, class StepFn>
void sweep(std::map<CellKey, S>& values, const Window& w, bool ascending, StepFn&& compute) {
    // Anti-diagonal sweep: all cells with m+n = s before s+1 (reversed for SW).
    int s_min = w.m_min + w.n_min;
    int s_max = w.m_max + w.n_max;
    auto run_diagonal = [&](int s) {
        for (int m = w.m_min; m <= w.m_max; ++m) {
            int n = s - m;
            if (n < w.n_min || n > w.n_max) continue;
            CellKey key{m, n};
            if (values.count(key)) continue;
            compute(key);
        }
    };
    if (ascending)
        for (int s = s_min; s <= s_max; ++s) run_diagonal(s);
    else
        for (int s = s_max; s >= s_min; --s) run_diagonal(s);
}

template <class S>
struct Lifter;

template <>
struct Lifter<Projective> {
    long truncation = 0;
    Projective constant(const Rational& r) const { return Projective(r); }
    Projective zero_seed() const { return Projective(Rational(0)); }
};

template <>
struct Lifter<LaurentQ> {
    long truncation = 12;
    LaurentQ constant(const Rational& r) const { return LaurentQ::constant(r, truncation); }
    LaurentQ zero_seed() const { return LaurentQ::epsilon(truncation); }
};

template <class S>
void evolve_into(std::map<CellKey, S>& values, const Staircase& staircase,
                 const MapParams& params, Direction dir, const Window& window,
                 const Lifter<S>& lift) {
    S a = lift.constant(params.a);
    S b = lift.constant(params.b);
    for (const auto& c : staircase.cells())
        values[{c.m, c.n}] = c.zero ? lift.zero_seed() : lift.constant(c.value);

    auto available = [&](int m, int n) { return values.find({m, n}) != values.end(); };

    if (dir == Direction::NE || dir == Direction::Both) {
        sweep(values, window, true, [&](CellKey key) {
            auto [m, n] = key;
            if (!available(m - 1, n - 1) || !available(m, n - 1) || !available(m - 1, n)) return;
            values.emplace(key, lattice_step_ne(values.at({m - 1, n - 1}), values.at({m, n - 1}),
                                                values.at({m - 1, n}), a, b));
        });
    }
    if (dir == Direction::SW || dir == Direction::Both) {
        sweep(values, window, false, [&](CellKey key) {
            auto [m, n] = key;
            if (!available(m + 1, n + 1) || !available(m + 1, n) || !available(m, n + 1)) return;
            values.emplace(key, lattice_step_sw(values.at({m + 1, n + 1}), values.at({m + 1, n}),
                                                values.at({m, n + 1}), a, b));
        });
    }
}

EntrySignature classify_cell(const LaurentQ& v) { return v.classify(); }

EntrySignature classify_cell(const Projective& v) {
    if (v.is_infinity()) return EntrySignature::inf_like(1);
    if (v.is_zero()) return EntrySignature::zero_like(1);
    return EntrySignature::regular();
}

template <class Grid>
PatternMap pattern_of_impl(const Grid& grid, const Staircase& staircase,
                           const MapParams& params) {
    PatternMap map;
    map.window = grid.window;
    map.staircase_cells = grid.staircase_cells;
    map.params_a = params.a.str();
    map.params_b = params.b.str();
    for (const auto& [key, value] : grid.cells) {
        if (!grid.staircase_cells.count(key)) map.computed_cells.insert(key);
        EntrySignature sig = classify_cell(value);
        if (sig.is_singular()) map.marks.emplace(key, sig);
    }
    return map;
}

}  // namespace

std::vector<Staircase::Cell> Staircase::cells() const {
    std::vector<Cell> out;
    int n0 = anchor_n;
    for (std::size_t j = 0; j < steps.size(); ++j) {
        const StaircaseStep& st = steps[j];
        int row = anchor_m - static_cast<int>(j);
        for (int i = 0; i <= st.width; ++i) {
            bool zero = i < static_cast<int>(st.zero_marks.size()) && st.zero_marks[static_cast<std::size_t>(i)];
            Rational v = i < static_cast<int>(st.values.size()) ? st.values[static_cast<std::size_t>(i)] : Rational(0);
            out.push_back({row, n0 + i, v, zero});
        }
        n0 += st.width;
    }
    return out;
}

bool Staircase::has_zero() const {
    for (const auto& st : steps)
        for (bool z : st.zero_marks)
            if (z) return true;
    return false;
}

void Staircase::validate() const {
    if (steps.empty()) throw std::invalid_argument("staircase needs at least one step");
    for (const auto& st : steps) {
        if (st.width < 1) throw std::invalid_argument("staircase step width must be >= 1");
        if (st.values.size() != static_cast<std::size_t>(st.width) + 1)
            throw std::invalid_argument("staircase step needs width+1 values");
        if (!st.zero_marks.empty() && st.zero_marks.size() != st.values.size())
            throw std::invalid_argument("zero marks must match the value count");
        for (std::size_t i = 0; i < st.values.size(); ++i) {
            bool zero = i < st.zero_marks.size() && st.zero_marks[i];
            if (!zero && st.values[i].is_zero())
                throw std::invalid_argument(
                    "unmarked zero initial value; mark it to seed eps instead");
        }
    }
}

Staircase make_periodic_staircase(int q, const std::vector<Rational>& values, int n_steps,
                                  int anchor_m, int anchor_n, std::optional<int> zero_pos) {
    if (values.size() != static_cast<std::size_t>(q) + 1)
        throw std::invalid_argument("periodic staircase needs q+1 values");
    Staircase s;
    s.anchor_m = anchor_m;
    s.anchor_n = anchor_n;
    for (int j = 0; j < n_steps; ++j) {
        StaircaseStep st;
        st.width = q;
        st.values = values;
        st.zero_marks.assign(values.size(), false);
        if (zero_pos) {
            if (*zero_pos < 1 || *zero_pos > q + 1)
                throw std::invalid_argument("zero position must lie in [1, q+1]");
            st.zero_marks[static_cast<std::size_t>(*zero_pos) - 1] = true;
        }
        s.steps.push_back(std::move(st));
    }
    return s;
}

Window default_window(const Staircase& staircase) {
    auto cells = staircase.cells();
    Window w{cells.front().m, cells.front().m, cells.front().n, cells.front().n};
    int max_width = 1;
    for (const auto& c : cells) {
        w.m_min = std::min(w.m_min, c.m);
        w.m_max = std::max(w.m_max, c.m);
        w.n_min = std::min(w.n_min, c.n);
        w.n_max = std::max(w.n_max, c.n);
    }
    for (const auto& st : staircase.steps) max_width = std::max(max_width, st.width);
    int margin = 3 * max_width;
    return {w.m_min - margin, w.m_max + margin, w.n_min - margin, w.n_max + margin};
}

LatticeGridQ evolve_laurent(const Staircase& staircase, const MapParams& params, Direction dir,
                            const Window& window, long truncation) {
    staircase.validate();
    long trunc = truncation > 0 ? truncation : 12;
    for (int doubling = 0;; ++doubling) {
        try {
            LatticeGridQ grid;
            grid.window = window;
            for (const auto& c : staircase.cells()) grid.staircase_cells.insert({c.m, c.n});
            Lifter<LaurentQ> lift{trunc};
            evolve_into(grid.cells, staircase, params, dir, window, lift);
            for (const auto& [key, value] : grid.cells) value.classify();  // force determination
            return grid;
        } catch (const UndeterminedLeading&) {
            if (doubling >= kMaxDoublings) throw TruncationExhausted(trunc);
            trunc *= 2;
        }
    }
}

LatticeGridP evolve_projective(const Staircase& staircase, const MapParams& params, Direction dir,
                               const Window& window) {
    staircase.validate();
    LatticeGridP grid;
    grid.window = window;
    for (const auto& c : staircase.cells()) grid.staircase_cells.insert({c.m, c.n});
    Lifter<Projective> lift;
    evolve_into(grid.cells, staircase, params, dir, window, lift);
    return grid;
}

const LaurentQ& cell(const LatticeGridQ& grid, int m, int n) {
    auto it = grid.cells.find({m, n});
    if (it == grid.cells.end()) throw WindowUndetermined(m, n);
    return it->second;
}

const Projective& cell(const LatticeGridP& grid, int m, int n) {
    auto it = grid.cells.find({m, n});
    if (it == grid.cells.end()) throw WindowUndetermined(m, n);
    return it->second;
}

PatternMap pattern_of(const LatticeGridQ& grid, const Staircase& staircase,
                      const MapParams& params) {
    return pattern_of_impl(grid, staircase, params);
}

PatternMap pattern_of(const LatticeGridP& grid, const Staircase& staircase,
                      const MapParams& params) {
    return pattern_of_impl(grid, staircase, params);
}

PatternMap evolve(const Staircase& staircase, const MapParams& params, Direction dir,
                  const Window* window) {
    staircase.validate();
    Window w = window ? *window : default_window(staircase);
    if (staircase.has_zero()) {
        return pattern_of(evolve_laurent(staircase, params, dir, w), staircase, params);
    }
    return pattern_of(evolve_projective(staircase, params, dir, w), staircase, params);
}

std::vector<InteractionCase> classify_interaction(const Staircase& staircase,
                                                  const MapParams& params) {
    (void)params;  // geometry alone decides the label
    staircase.validate();

    struct Zero {
        int step;       // index into staircase.steps
        int position;   // 1-based slot within the step, u_1 .. u_{width+1}
        int width;
    };
    std::vector<Zero> zeros;
    for (std::size_t j = 0; j < staircase.steps.size(); ++j) {
        const auto& st = staircase.steps[j];
        int found = 0;
        for (std::size_t i = 0; i < st.zero_marks.size(); ++i) {
            if (!st.zero_marks[i]) continue;
            ++found;
            zeros.push_back({static_cast<int>(j), static_cast<int>(i) + 1, st.width});
        }
        if (found > 1) throw SameStepUnsupported();
    }

    enum class ZeroType { Open, Anticonfining, Sunken };
    auto type_of = [](const Zero& z) {
        if (z.position == z.width + 1) return ZeroType::Open;
        if (z.position >= 2) return ZeroType::Anticonfining;
        return ZeroType::Sunken;  // never singular
    };

    std::vector<InteractionCase> cases;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        for (std::size_t j = i + 1; j < zeros.size(); ++j) {
            const Zero& upper = zeros[i].step < zeros[j].step ? zeros[i] : zeros[j];
            const Zero& lower = zeros[i].step < zeros[j].step ? zeros[j] : zeros[i];
            InteractionCase c{upper.step, lower.step, "NoInteraction"};
            if (lower.step == upper.step + 1) {
                ZeroType ut = type_of(upper), lt = type_of(lower);
                if (ut == ZeroType::Open && lt == ZeroType::Open)
                    c.label = lower.position == 2 ? "Case1" : "Case2";
                else if (ut == ZeroType::Open && lt == ZeroType::Anticonfining)
                    c.label = lower.position == 2 ? "Case3" : "Case4";
                else if (ut == ZeroType::Anticonfining && lt == ZeroType::Open)
                    c.label = "Case4";
                else if (ut == ZeroType::Anticonfining && lt == ZeroType::Anticonfining)
                    c.label = "Case5";
            }
            cases.push_back(std::move(c));
        }
    }
    return cases;
}

std::string render_ascii(const PatternMap& map, const GlyphSet& glyphs) {
    std::ostringstream os;
    for (int m = map.window.m_max; m >= map.window.m_min; --m) {
        for (int n = map.window.n_min; n <= map.window.n_max; ++n) {
            CellKey key{m, n};
            auto mark = map.marks.find(key);
            if (mark != map.marks.end()) {
                os << (mark->second.kind == EntrySignature::Kind::InfLike ? glyphs.inf
                                                                          : glyphs.zero);
            } else if (map.staircase_cells.count(key)) {
                os << glyphs.initial;
            } else if (map.computed_cells.count(key)) {
                os << glyphs.regular;
            } else {
                os << glyphs.empty;
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string render_json(const PatternMap& map, const Staircase& staircase,
                        const std::vector<InteractionCase>& cases) {
    ordered_json j;
    j["params"] = {{"a", map.params_a}, {"b", map.params_b}};
    ordered_json steps = ordered_json::array();
    for (const auto& st : staircase.steps) {
        ordered_json step;
        step["width"] = st.width;
        ordered_json values = ordered_json::array();
        for (std::size_t i = 0; i < st.values.size(); ++i) {
            bool zero = i < st.zero_marks.size() && st.zero_marks[i];
            values.push_back(zero ? "0" : st.values[i].str());
        }
        step["values"] = values;
        steps.push_back(step);
    }
    j["staircase"] = steps;
    j["anchor"] = {staircase.anchor_m, staircase.anchor_n};
    ordered_json marks = ordered_json::array();
    for (const auto& [key, sig] : map.marks) {
        ordered_json mark;
        mark["m"] = key.first;
        mark["n"] = key.second;
        mark["class"] = sig.kind == EntrySignature::Kind::InfLike ? "inf" : "zero";
        mark["order"] = sig.order == EntrySignature::kInfiniteOrder ? -1 : sig.order;
        marks.push_back(mark);
    }
    j["marks"] = marks;
    ordered_json cs = ordered_json::array();
    for (const auto& c : cases)
        cs.push_back({{"upper_step", c.upper_step}, {"lower_step", c.lower_step}, {"label", c.label}});
    j["cases"] = cs;
    return j.dump(2);
}

std::string render_svg(const PatternMap& map) {
    const int cell = 24;
    const Window& w = map.window;
    int width = (w.n_max - w.n_min + 1) * cell;
    int height = (w.m_max - w.m_min + 1) * cell;
    auto px = [&](int n) { return (n - w.n_min) * cell; };
    auto py = [&](int m) { return (w.m_max - m) * cell; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // staircase polyline through cell centers
    std::vector<CellKey> path(map.staircase_cells.begin(), map.staircase_cells.end());
    std::sort(path.begin(), path.end(),
              [](const CellKey& a, const CellKey& b) { return a.second != b.second ? a.second < b.second : a.first > b.first; });
    if (!path.empty()) {
        os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
        for (const auto& [m, n] : path) os << px(n) + cell / 2 << "," << py(m) + cell / 2 << " ";
        os << "\"/>\n";
    }

    for (const auto& key : map.computed_cells) {
        if (map.marks.count(key)) continue;
        os << "  <circle cx=\"" << px(key.second) + cell / 2 << "\" cy=\"" << py(key.first) + cell / 2
           << "\" r=\"2\" fill=\"#bbbbbb\"/>\n";
    }
    for (const auto& [key, sig] : map.marks) {
        bool inf = sig.kind == EntrySignature::Kind::InfLike;
        os << "  <circle cx=\"" << px(key.second) + cell / 2 << "\" cy=\"" << py(key.first) + cell / 2
           << "\" r=\"" << cell / 3 << "\" fill=\"" << (inf ? "#d62728" : "#1f77b4") << "\"/>\n";
        os << "  <text x=\"" << px(key.second) + cell / 2 << "\" y=\"" << py(key.first) + cell / 2 + 4
           << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"white\">" << (inf ? "8" : "0")
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace dkdv
