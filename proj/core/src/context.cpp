#include "sac/context.hpp"

namespace sac {

Context Context::inner() const {
  if (is_hole()) throw Error("inner() of a hole context");
  return Context(conn_, std::vector<Frame>(frames_.begin() + 1, frames_.end()));
}

Context Context::wrapped(bool side_on_left, Formula side) const {
  std::vector<Frame> fs;
  fs.reserve(frames_.size() + 1);
  fs.push_back(Frame{side_on_left, std::move(side)});
  fs.insert(fs.end(), frames_.begin(), frames_.end());
  return Context(conn_, std::move(fs));
}

Context Context::extended(bool side_on_left, Formula side) const {
  std::vector<Frame> fs = frames_;
  fs.push_back(Frame{side_on_left, std::move(side)});
  return Context(conn_, std::move(fs));
}

Context Context::composed(const Context& inner) const {
  if (is_hole()) return inner;
  if (inner.is_hole()) return *this;
  if (conn_ != inner.conn_) throw Error("composing contexts of different polarity");
  std::vector<Frame> fs = frames_;
  fs.insert(fs.end(), inner.frames_.begin(), inner.frames_.end());
  return Context(conn_, std::move(fs));
}

Formula Context::apply(const Formula& a) const {
  Formula out = a;
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    out = it->side_on_left ? Formula::bin(conn_, it->side, out)
                           : Formula::bin(conn_, out, it->side);
  }
  return out;
}

Path Context::hole_path() const {
  Path p;
  p.reserve(frames_.size());
  for (const Frame& f : frames_) p.push_back(f.side_on_left ? Step::right : Step::left);
  return p;
}

Formula Context::frame_formula() const {
  if (is_hole()) throw Error("frame of a hole context is undefined");
  if (frames_.size() == 1) return frames_[0].side;
  const Frame& f = frames_[0];
  Formula rest = inner().frame_formula();
  return f.side_on_left ? Formula::bin(conn_, f.side, rest)
                        : Formula::bin(conn_, rest, f.side);
}

Context Context::of_formula_at(const Formula& a, const Path& p, Conn c) {
  std::vector<Frame> fs;
  fs.reserve(p.size());
  Formula cur = a;
  for (Step s : p) {
    if (!cur.is_bin(c)) throw Error("context path leaves the " + std::string(conn_text(c)) + " spine");
    if (s == Step::left) {
      fs.push_back(Frame{false, cur.right()});
      cur = cur.left();
    } else if (s == Step::right) {
      fs.push_back(Frame{true, cur.left()});
      cur = cur.right();
    } else {
      throw Error("context path steps through a negation");
    }
  }
  return Context(c, std::move(fs));
}

bool Context::operator==(const Context& other) const {
  if (is_hole() && other.is_hole()) return true;  // polarity of a bare hole is immaterial
  return conn_ == other.conn_ && frames_ == other.frames_;
}

std::string Context::str() const { return apply(Formula::letter("_")).str(); }

std::optional<ContextLocation> locate_in_context(const Context& ctx, const Path& p) {
  const Path hole = ctx.hole_path();
  for (std::size_t i = 0; i < hole.size(); ++i) {
    if (i >= p.size()) return std::nullopt;  // path stops on the spine
    if (p[i] != hole[i]) {
      ContextLocation loc;
      loc.under_hole = false;
      loc.frame_index = i;
      loc.side_suffix = Path(p.begin() + i + 1, p.end());
      return loc;
    }
  }
  ContextLocation loc;
  loc.under_hole = true;
  loc.under_hole_suffix = Path(p.begin() + hole.size(), p.end());
  return loc;
}

}  // namespace sac
