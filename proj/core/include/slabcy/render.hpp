#pragma once

#include <string>

#include <slabcy/fan.hpp>
#include <slabcy/mirror.hpp>
#include <slabcy/series.hpp>
#include <slabcy/slab.hpp>
#include <slabcy/verify.hpp>

namespace slabcy {

// Canonical textual rendering: one term per line, "NUM/DEN q^[a,...]", in
// (degree, lex) order; the zero series renders as "0".
std::string render_series(const QSeries& s);
// Same terms on a single line, joined by " + ".
std::string render_series_inline(const QSeries& s);
// JSON: {"order":K,"weights":[...],"terms":[{"e":[...],"c":"num/den"},...]}
std::string render_series_json(const QSeries& s);

// z-monomial in the display variables: x, y for n <= 3, else z1..z_{n-1};
// the trivial monomial renders as "1".
std::string render_z_monomial(const ZMonomial& z, int n);

// Paper display convention: constant block first, the rest sorted by
// z-exponent.  Ray and variable numbering is 1-based in all rendered output.
std::string render_slab(const FanData& fan, const SlabFunction& f);
std::string render_slab_json(const FanData& fan, const SlabFunction& f);

std::string render_fan_info(const FanData& fan, const Grading& grading);
std::string render_fan_info_json(const FanData& fan, const Grading& grading);

std::string render_mirror_map(const FanData& fan, const MirrorMap& map, bool inverse);
std::string render_mirror_map_json(const FanData& fan, const MirrorMap& map, bool inverse);

std::string render_report(const VerifyReport& report);
std::string render_report_json(const VerifyReport& report);

}  // namespace slabcy
