#include "normlab/perm.hpp"

#include <numeric>
#include <sstream>

#include "normlab/error.hpp"

namespace normlab {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm Perm::from_images(std::span<const Point> images_one_based) {
  const std::size_t n = images_one_based.size();
  std::vector<Point> raw(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Point img = images_one_based[i];
    if (img < 1 || img > n) {
      throw Error(ErrorKind::PointOutOfRange, "image " + std::to_string(img) + " outside 1.." + std::to_string(n));
    }
    if (seen[img - 1]) {
      throw Error(ErrorKind::DuplicatePoint, "image " + std::to_string(img) + " repeated");
    }
    seen[img - 1] = true;
    raw[i] = img - 1;
  }
  return from_raw(std::move(raw));
}

Perm Perm::from_raw(std::vector<Point> images_zero_based) {
  Perm p;
  p.images_ = std::move(images_zero_based);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point pt : cycle) {
      if (pt < 1 || pt > degree) {
        throw Error(ErrorKind::PointOutOfRange,
                    "point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      }
      if (used[pt - 1]) throw Error(ErrorKind::DuplicatePoint, "point " + std::to_string(pt) + " repeated");
      used[pt - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return p;
}

Point Perm::image(Point point) const {
  if (point < 1 || point > degree()) {
    throw Error(ErrorKind::PointOutOfRange, "point " + std::to_string(point));
  }
  return images_[point - 1] + 1;
}

std::vector<Point> Perm::images() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return from_raw(std::move(inv));
}

Perm Perm::pow(long long exponent) const {
  const std::size_t n = images_.size();
  std::vector<Point> out(n);
  std::vector<bool> done(n, false);
  std::vector<Point> cycle;
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    cycle.clear();
    for (Point x = static_cast<Point>(start); !done[x]; x = images_[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    const long long len = static_cast<long long>(cycle.size());
    const long long shift = ((exponent % len) + len) % len;
    for (long long i = 0; i < len; ++i) out[cycle[i]] = cycle[(i + shift) % len];
  }
  return from_raw(std::move(out));
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(start); !done[x]; x = images_[x]) {
      done[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !done[x]; x = images_[x]) {
      done[x] = true;
      cycle.push_back(x + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Perm::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << ' ';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

Point Perm::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::size_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::DegreeMismatch,
                "compose degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  }
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
  return Perm::from_raw(std::move(out));
}

Perm compose(const Perm& a, const Perm& b) { return a * b; }

Perm inverse(const Perm& a) { return a.inverse(); }

Perm conjugate(const Perm& x, const Perm& g) {
  if (x.degree() != g.degree()) throw Error(ErrorKind::DegreeMismatch, "conjugate");
  // (g^-1 x g) maps g(i) to g(x(i)).
  std::vector<Point> out(x.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[g[i]] = g[x[static_cast<Point>(i)]];
  return Perm::from_raw(std::move(out));
}

Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

Perm parse_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error(ErrorKind::ParseError, "expected '(' at column " + std::to_string(i + 1));
    }
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw Error(ErrorKind::ParseError, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') {
        throw Error(ErrorKind::ParseError, std::string("unexpected character '") + text[i] + "'");
      }
      std::uint64_t value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 0xffffffffull) throw Error(ErrorKind::PointOutOfRange, "point too large");
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Perm::from_cycles(degree, cycles);
}

}  // namespace normlab
