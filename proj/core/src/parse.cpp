#include "tdcalc/parse.hpp"

#include <cctype>

namespace tdcalc {

namespace {

class Parser {
 public:
  Parser(const std::string& text, ChartPtr chart)
      : text_(text), chart_(std::move(chart)) {}

  Form parse() {
    Form out = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  const std::string& text_;
  ChartPtr chart_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, static_cast<int>(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(text_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long integer() {
    skip_ws();
    bool neg = eat('-');
    if (!std::isdigit(peek())) fail("expected an integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(text_[pos_]))
      v = v * 10 + (text_[pos_++] - '0');
    return neg ? -v : v;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(text_[pos_]) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  Form sum() {
    Form acc = product();
    for (;;) {
      if (eat('+'))
        acc += product();
      else if (eat('-'))
        acc -= product();
      else
        return acc;
    }
  }

  Form product() {
    Form acc = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*' || c == '^') {
        ++pos_;
        acc = wedge(acc, factor());
      } else if (c == '/') {
        ++pos_;
        acc = wedge(acc, invert(factor()));
      } else {
        return acc;
      }
    }
  }

  Form invert(const Form& a) {
    FnElem f = a.coefficient(0);
    if (a.terms().size() > (f.is_zero() ? 0u : 1u) || !f.is_single_term())
      fail("can only divide by an invertible scalar");
    return Form::from_fn(chart_, f.inverse());
  }

  Form factor() {
    skip_ws();
    if (eat('-')) return -factor();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Form inner = sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(c)) {
      long v = integer();
      return Form::from_fn(chart_, fn::c(v, *chart_));
    }
    if (c == '@') {
      ++pos_;
      std::string name = ident();
      return Form::from_fn(chart_, fn::param(*chart_, name, power_suffix(1)));
    }
    if (std::isalpha(c)) return named_atom(ident());
    fail("expected an expression");
  }

  /// Optional ^<int> exponent on invertible monomial atoms; anything else
  /// after '^' is a wedge and is left for product().
  int power_suffix(int dflt) {
    skip_ws();
    std::size_t save = pos_;
    if (!eat('^')) return dflt;
    skip_ws();
    if (pos_ < text_.size() &&
        (std::isdigit(text_[pos_]) ||
         (text_[pos_] == '-' && pos_ + 1 < text_.size() &&
          std::isdigit(text_[pos_ + 1]))))
      return static_cast<int>(integer());
    pos_ = save;
    return dflt;
  }

  int find_index(const std::vector<std::string>& names,
                 const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }

  int radius_from_digits(const std::string& digits) {
    for (char ch : digits)
      if (!std::isdigit(ch)) fail("expected a radius index");
    int i = std::stoi(digits) - 1;
    if (i < 0 || i >= chart_->num_r) fail("radius index out of range");
    return i;
  }

  Form elliptic_pair_sugar(int i, bool log_form, bool bar) {
    // dlz/dlzb and dz/dzb over the elliptic frame.
    if (chart_->kind != FrameKind::Elliptic)
      fail("complex sugar needs an elliptic chart");
    int j = chart_->anchored_angle(i);
    if (j < 0) fail("radius has no anchored angle");
    auto fr = frame(*chart_);
    int pr = -1, pa = -1;
    for (std::size_t p = 0; p < fr.size(); ++p) {
      if (fr[p] == FrameSlot{FrameSlot::Kind::DLogR, i})
        pr = static_cast<int>(p);
      if (fr[p] == FrameSlot{FrameSlot::Kind::DAngle, j})
        pa = static_cast<int>(p);
    }
    Form leg = Form::covector(chart_, pr) +
               (bar ? -GaussianRational::i() : GaussianRational::i()) *
                   Form::covector(chart_, pa);
    if (log_form) return leg;
    return (bar ? fn::zbar(*chart_, i) : fn::z(*chart_, i)) * leg;
  }

  Form named_atom(const std::string& name) {
    if (name == "i")
      return Form::from_fn(chart_, fn::i_unit(*chart_));
    if (name == "exp") {
      if (!eat('(')) fail("expected '(' after exp");
      Form inner = sum();
      if (!eat(')')) fail("expected ')'");
      return exterior_exp(inner);
    }
    auto fr = frame(*chart_);
    for (std::size_t p = 0; p < fr.size(); ++p)
      if (slot_label(*chart_, fr[p]) == name)
        return Form::covector(chart_, static_cast<int>(p));
    if (name.size() > 3 && name.rfind("dlzb", 0) == 0)
      return elliptic_pair_sugar(radius_from_digits(name.substr(4)), true,
                                 true);
    if (name.size() > 2 && name.rfind("dlz", 0) == 0)
      return elliptic_pair_sugar(radius_from_digits(name.substr(3)), true,
                                 false);
    if (name.size() > 2 && name.rfind("dzb", 0) == 0)
      return elliptic_pair_sugar(radius_from_digits(name.substr(3)), false,
                                 true);
    if (name.size() > 1 && name.rfind("dz", 0) == 0)
      return elliptic_pair_sugar(radius_from_digits(name.substr(2)), false,
                                 false);
    int ri = find_index(chart_->r_names, name);
    if (ri >= 0)
      return Form::from_fn(chart_, fn::r(*chart_, ri, power_suffix(1)));
    int xi = find_index(chart_->x_names, name);
    if (xi >= 0) {
      int e = power_suffix(1);
      if (e < 0) fail("negative x exponent");
      return Form::from_fn(chart_, fn::x(*chart_, xi, e));
    }
    if (name.size() > 1 && name[0] == 'E') {
      std::string rest = name.substr(1);
      int j = find_index(chart_->angle_names, rest);
      if (j < 0 && std::isdigit(rest[0])) j = std::stoi(rest) - 1;
      if (j < 0 || j >= chart_->num_angles()) fail("unknown angle " + rest);
      if (!eat('[')) fail("expected '[' after E atom");
      int k = static_cast<int>(integer());
      if (!eat(']')) fail("expected ']'");
      return Form::from_fn(chart_, fn::E(*chart_, j, k));
    }
    if (name.size() > 2 && name.rfind("zb", 0) == 0)
      return Form::from_fn(
          chart_, fn::zbar(*chart_, radius_from_digits(name.substr(2))));
    if (name.size() > 1 && name[0] == 'z' && std::isdigit(name[1]))
      return Form::from_fn(chart_,
                           fn::z(*chart_, radius_from_digits(name.substr(1))));
    fail("unknown name " + name);
  }
};

}  // namespace

Form parse_form(const std::string& text, ChartPtr chart) {
  return Parser(text, std::move(chart)).parse();
}

}  // namespace tdcalc
