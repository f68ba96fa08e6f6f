#include "tdcalc/chart.hpp"

namespace tdcalc {

std::vector<FrameSlot> frame(const Chart& chart) {
  using K = FrameSlot::Kind;
  std::vector<FrameSlot> out;
  std::vector<bool> angle_done(chart.num_angles(), false);
  switch (chart.kind) {
    case FrameKind::Elliptic:
    case FrameKind::RealLog:
      for (int i = 0; i < chart.num_r; ++i) {
        out.push_back({K::DLogR, i});
        if (chart.kind == FrameKind::Elliptic) {
          int j = chart.anchored_angle(i);
          if (j >= 0) {
            out.push_back({K::DAngle, j});
            angle_done[j] = true;
          }
        }
      }
      break;
    case FrameKind::ComplexLog:
      for (int i = 0; i < chart.num_r; ++i) {
        out.push_back({K::DLogZ, i});
        out.push_back({K::DZBar, i});
        int j = chart.anchored_angle(i);
        if (j >= 0) angle_done[j] = true;  // absorbed into z/zbar
      }
      break;
    case FrameKind::ComplexSmooth:
      for (int i = 0; i < chart.num_r; ++i) {
        out.push_back({K::DZ, i});
        out.push_back({K::DZBar, i});
        int j = chart.anchored_angle(i);
        if (j >= 0) angle_done[j] = true;
      }
      break;
    case FrameKind::Smooth:
      break;
  }
  for (int j = 0; j < chart.num_angles(); ++j)
    if (!angle_done[j]) out.push_back({K::DAngle, j});
  for (int s = 0; s < chart.num_x; ++s) out.push_back({K::DX, s});
  return out;
}

std::string slot_label(const Chart& chart, const FrameSlot& slot) {
  using K = FrameSlot::Kind;
  switch (slot.kind) {
    case K::DLogR:
      return (chart.kind == FrameKind::RealLog ? "dlx" + chart.r_names[slot.index].substr(1)
                                               : "dl" + chart.r_names[slot.index]);
    case K::DAngle:
      return "d" + chart.angle_names[slot.index];
    case K::DX:
      return "d" + chart.x_names[slot.index];
    case K::DLogZ:
      return "dlz" + chart.r_names[slot.index].substr(1);
    case K::DZ:
      return "dz" + chart.r_names[slot.index].substr(1);
    case K::DZBar:
      return "dzb" + chart.r_names[slot.index].substr(1);
  }
  return "?";
}

std::string vector_label(const Chart& chart, const FrameSlot& slot) {
  using K = FrameSlot::Kind;
  switch (slot.kind) {
    case K::DLogR:
      return chart.r_names[slot.index] + "d" + chart.r_names[slot.index];
    case K::DAngle:
      return "d_" + chart.angle_names[slot.index];
    case K::DX:
      return "d_" + chart.x_names[slot.index];
    default:
      return "dual(" + slot_label(chart, slot) + ")";
  }
}

static std::vector<std::string> numbered(const std::string& stem, int n,
                                         int start = 1) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(start + i));
  return out;
}

ChartPtr make_elliptic_chart(int l, int f, int m,
                             std::vector<std::string> params) {
  auto c = std::make_shared<Chart>();
  c->kind = FrameKind::Elliptic;
  c->num_r = l;
  c->num_x = m;
  c->params = std::move(params);
  for (int i = 0; i < l; ++i) c->angle_anchor.push_back(i);
  for (int j = 0; j < f; ++j) c->angle_anchor.push_back(-1);
  c->r_names = numbered("r", l);
  c->angle_names = numbered("th", l);
  auto ps = numbered("ps", f);
  c->angle_names.insert(c->angle_names.end(), ps.begin(), ps.end());
  c->x_names = numbered("x", m);
  return c;
}

ChartPtr make_real_log_chart(int l, int f, int m,
                             std::vector<std::string> params) {
  auto c = std::make_shared<Chart>();
  c->kind = FrameKind::RealLog;
  c->num_r = l;
  c->num_x = m;
  c->params = std::move(params);
  for (int j = 0; j < f; ++j) c->angle_anchor.push_back(-1);
  c->r_names = numbered("x", l);
  c->angle_names = numbered("ps", f);
  c->x_names = numbered("x", m, l + 1);
  return c;
}

ChartPtr make_smooth_chart(int f, int m, std::vector<std::string> params) {
  auto c = std::make_shared<Chart>();
  c->kind = FrameKind::Smooth;
  c->num_x = m;
  c->params = std::move(params);
  for (int j = 0; j < f; ++j) c->angle_anchor.push_back(-1);
  c->angle_names = numbered("ps", f);
  c->x_names = numbered("x", m);
  return c;
}

ChartPtr with_kind(const Chart& chart, FrameKind kind) {
  auto c = std::make_shared<Chart>(chart);
  c->kind = kind;
  return c;
}

ChartPtr remove_pair(const Chart& chart, int i) {
  if (i < 0 || i >= chart.num_r) throw std::out_of_range("radius index");
  auto c = std::make_shared<Chart>();
  c->kind = chart.kind;
  c->num_r = chart.num_r - 1;
  c->num_x = chart.num_x;
  c->params = chart.params;
  c->x_names = chart.x_names;
  for (int k = 0; k < chart.num_r; ++k)
    if (k != i) c->r_names.push_back(chart.r_names[k]);
  for (int j = 0; j < chart.num_angles(); ++j) {
    int a = chart.angle_anchor[j];
    if (a == i) continue;
    c->angle_anchor.push_back(a > i ? a - 1 : a);
    c->angle_names.push_back(chart.angle_names[j]);
  }
  return c;
}

ChartPtr demote_r(const Chart& chart, int i) {
  if (i < 0 || i >= chart.num_r) throw std::out_of_range("radius index");
  auto c = std::make_shared<Chart>();
  c->kind = chart.kind;
  c->num_r = chart.num_r - 1;
  c->num_x = chart.num_x;
  c->params = chart.params;
  c->x_names = chart.x_names;
  for (int k = 0; k < chart.num_r; ++k)
    if (k != i) c->r_names.push_back(chart.r_names[k]);
  for (int j = 0; j < chart.num_angles(); ++j) {
    int a = chart.angle_anchor[j];
    c->angle_anchor.push_back(a == i ? -1 : (a > i ? a - 1 : a));
    c->angle_names.push_back(chart.angle_names[j]);
  }
  return c;
}

}  // namespace tdcalc
