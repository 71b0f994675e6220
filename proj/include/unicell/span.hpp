#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unicell/hom.hpp"
#include "unicell/io.hpp"
#include "unicell/universality.hpp"

namespace unicell {

/// A level grew past its configured cap.
class SpanCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element of level j of the composition span: a chain of 2^j universal
/// 2-ary cells. Legs along the chain repeat with period 4:
///   i = 1 mod 4: (s2, t)   i = 2 mod 4: (t, s1)
///   i = 3 mod 4: (s1, t)   i = 0 mod 4: (t, s2)
/// and adjacent legs share the middle cell.
struct SpanTuple {
    int level = 0;
    std::vector<CellId> components;
    std::vector<CellId> middles;
    CellId sigma_image;
    CellId tau_image;
    std::optional<std::size_t> frame_source;  // index into level - 1
    std::optional<std::size_t> frame_target;  // index into level - 1

    friend bool operator==(const SpanTuple& a, const SpanTuple& b) {
        return a.level == b.level && a.components == b.components && a.frame_source == b.frame_source &&
               a.frame_target == b.frame_target;
    }
};

struct SpanRejection {
    int level = 0;
    std::vector<CellId> components;
    std::string reason;
};

struct SpanOptions {
    std::size_t level_cap = 100000;
};

/// Level cap from UNICELL_SPAN_CAP, else the default.
SpanOptions span_options_from_env();

struct CompositionSpan {
    CellId f;
    CellId c;
    int n = 0;
    int k = 0;
    HomStructure x1;  // X(b, c)
    HomStructure x2;  // X(a, c)
    std::vector<std::vector<SpanTuple>> levels;
    std::vector<SpanRejection> rejections;
    FragmentBounds bounds;

    int max_level() const { return static_cast<int>(levels.size()) - 1; }
};

/// Leg cells of component `i` (1-based) of a level-j chain.
CellId left_leg(const Cell& w, std::size_t i);
CellId right_leg(const Cell& w, std::size_t i);
/// Chain positions whose s1 is pinned to the frame target: 1, 4, 5, 8, ...
bool is_constrained_position(std::size_t i);

std::vector<const Cell*> universal_2ary(const OpetopicSet& x, int m, int n, UniversalityChecker& chk);

/// Frame of the span for f and c: X(b, c) and X(a, c).
CompositionSpan make_span(const OpetopicSet& x, const CellId& f, const CellId& c, int n);

std::vector<SpanTuple> build_c0(const CompositionSpan& s, UniversalityChecker& chk);
/// Level 1 as a pullback of the two sets {u | s1(u) = u2} and {u' | s2(u') = u1}.
std::vector<SpanTuple> build_c1(const CompositionSpan& s, UniversalityChecker& chk,
                                std::vector<SpanRejection>* rejected = nullptr,
                                const SpanOptions& opt = {});
/// Level j >= 1 by the general chain rule over the previous level.
std::vector<SpanTuple> build_cj(const CompositionSpan& s, int j, UniversalityChecker& chk,
                                std::vector<SpanRejection>* rejected = nullptr,
                                const SpanOptions& opt = {});

/// Levels 0..J; level 1 via build_c1, higher levels via build_cj.
CompositionSpan build_span(const OpetopicSet& x, const CellId& f, const CellId& c, int n, int J,
                           UniversalityChecker& chk, const SpanOptions& opt = {});
CompositionSpan build_span(const OpetopicSet& x, const CellId& f, const CellId& c, int n, int J,
                           const SpanOptions& opt = {});

/// Empty when the tuple commutes with the boundaries of its frame; otherwise
/// the reason.
std::string commutativity_problem(const CompositionSpan& s, const SpanTuple& t);

Json to_json(const SpanTuple& t);
Json to_json(const CompositionSpan& s);

}  // namespace unicell
