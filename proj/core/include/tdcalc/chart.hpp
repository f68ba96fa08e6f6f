#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdcalc {

/// Which local frame is in force for forms over the chart.
///
/// Elliptic:      dlogr_i, dangle_j, dx_s      (polar pairs)
/// ComplexLog:    dlogz_i, dzbar_i, dangle(free), dx
/// ComplexSmooth: dz_i, dzbar_i, dangle(free), dx   (used for smoothness tests)
/// RealLog:       dlogx_i, dangle(free), dx
/// Smooth:        dangle(free), dx
enum class FrameKind { Elliptic, ComplexLog, ComplexSmooth, RealLog, Smooth };

/// Local model C^l x T^f x R^m (or its real-log / smooth analogues).
///
/// Angles carry an anchor: the index of the polar radius they belong to, or
/// -1 for a free torus angle. Correspondence charts anchor two angles to one
/// radius. All bookkeeping (frame order, monomial exponent layout, printing)
/// derives from this one struct.
struct Chart {
  FrameKind kind = FrameKind::Elliptic;
  int num_r = 0;
  std::vector<int> angle_anchor;
  int num_x = 0;
  std::vector<std::string> params;

  // Coordinate names used by the printer/parser.
  std::vector<std::string> r_names;
  std::vector<std::string> angle_names;
  std::vector<std::string> x_names;

  int num_angles() const { return static_cast<int>(angle_anchor.size()); }
  int num_params() const { return static_cast<int>(params.size()); }

  /// First angle anchored to radius i, or -1.
  int anchored_angle(int i) const {
    for (int j = 0; j < num_angles(); ++j)
      if (angle_anchor[j] == i) return j;
    return -1;
  }

  int param_index(const std::string& name) const {
    for (int p = 0; p < num_params(); ++p)
      if (params[p] == name) return p;
    throw std::out_of_range("unknown parameter " + name);
  }

  /// Structural equality; names are cosmetic and ignored.
  bool same_shape(const Chart& o) const {
    return kind == o.kind && num_r == o.num_r &&
           angle_anchor == o.angle_anchor && num_x == o.num_x &&
           params == o.params;
  }
};

using ChartPtr = std::shared_ptr<const Chart>;

struct FrameSlot {
  enum class Kind { DLogR, DAngle, DX, DLogZ, DZ, DZBar };
  Kind kind;
  int index;  // r-index, angle-index or x-index depending on kind

  bool operator==(const FrameSlot& o) const {
    return kind == o.kind && index == o.index;
  }
};

/// Canonical ordered frame of the chart; the order fixes every wedge sign.
std::vector<FrameSlot> frame(const Chart& chart);

/// Printable label of a frame covector, e.g. "dlr1", "dth2", "dx1", "dlz1".
std::string slot_label(const Chart& chart, const FrameSlot& slot);
/// Label of the dual frame vector, e.g. "r1@r1" printed as "rdr1" etc.
std::string vector_label(const Chart& chart, const FrameSlot& slot);

/// Standard elliptic chart: radii r1..rl with anchored angles th1..thl,
/// free angles ps1..psf, real coordinates x1..xm.
ChartPtr make_elliptic_chart(int l, int f, int m,
                             std::vector<std::string> params = {});
/// Real-log chart: log coordinates x1..xl, free angles ps1..psf, smooth
/// coordinates x{l+1}..x{l+m}.
ChartPtr make_real_log_chart(int l, int f, int m,
                             std::vector<std::string> params = {});
/// Smooth chart with free angles and real coordinates only.
ChartPtr make_smooth_chart(int f, int m, std::vector<std::string> params = {});

/// Same chart with the complex-log (resp. complex-smooth) frame in force.
ChartPtr with_kind(const Chart& chart, FrameKind kind);

/// Chart surgeries used by the residue maps.
/// Removes radius i together with every angle anchored to it.
ChartPtr remove_pair(const Chart& chart, int i);
/// Removes radius i but keeps its angles as free angles (S^1 ND charts).
ChartPtr demote_r(const Chart& chart, int i);

}  // namespace tdcalc
