#ifndef SAC_CONTEXT_HPP
#define SAC_CONTEXT_HPP

#include <span>
#include <vector>

#include "sac/formula.hpp"

namespace sac {

// One-hole context built from a single binary connective. Frames are stored
// outermost first: {side_on_left = true, A} stands for A xi Z, and
// {side_on_left = false, A} for Z xi A.
class Context {
 public:
  struct Frame {
    bool side_on_left;
    Formula side;
    bool operator==(const Frame& o) const {
      return side_on_left == o.side_on_left && side == o.side;
    }
  };

  static Context hole(Conn c) { return Context(c, {}); }
  Context(Conn c, std::vector<Frame> frames) : conn_(c), frames_(std::move(frames)) {}

  Conn conn() const { return conn_; }
  bool is_hole() const { return frames_.empty(); }
  bool is_proper() const { return !frames_.empty(); }
  std::size_t depth() const { return frames_.size(); }
  std::span<const Frame> frames() const { return frames_; }
  const Frame& outer_frame() const { return frames_.front(); }

  // Drops the outermost frame.
  Context inner() const;
  // Wraps with a new outermost frame.
  Context wrapped(bool side_on_left, Formula side) const;
  // Adds a new innermost frame (next to the hole).
  Context extended(bool side_on_left, Formula side) const;
  // Plugs `inner` into this context's hole.
  Context composed(const Context& inner) const;

  // Substitutes into the hole.
  Formula apply(const Formula& a) const;
  // Path from the root of apply(a) to the hole.
  Path hole_path() const;
  // E_X for conj contexts, D_Y for disj contexts; requires a proper context.
  Formula frame_formula() const;

  // The context of `a` at `p`: every step must pass through a binary node
  // with connective c. Throws on mismatch.
  static Context of_formula_at(const Formula& a, const Path& p, Conn c);

  bool operator==(const Context& other) const;
  bool operator!=(const Context& other) const { return !(*this == other); }

  std::string str() const;  // formula text with `_` for the hole

 private:
  Conn conn_;
  std::vector<Frame> frames_;
};

// Splits a path against a context's hole: either the path goes through the
// hole (suffix returned) or it enters the side formula of some frame.
struct ContextLocation {
  bool under_hole = false;
  Path under_hole_suffix;
  std::size_t frame_index = 0;  // valid when !under_hole
  Path side_suffix;
};
std::optional<ContextLocation> locate_in_context(const Context& ctx, const Path& p);

}  // namespace sac

#endif
