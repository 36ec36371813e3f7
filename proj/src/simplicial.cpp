#include "smi/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace smi {

void validate(const SimplexMap& m) {
  if (m.src < 0 || m.dst < 0 || m.image.size() != static_cast<size_t>(m.src + 2))
    throw ObjectMismatch("bad simplex map arity");
  if (m.image.front() != 0 || m.image.back() != m.dst + 1)
    throw ObjectMismatch("simplex map must preserve the endpoints");
  for (size_t i = 0; i + 1 < m.image.size(); ++i)
    if (m.image[i] > m.image[i + 1]) throw ObjectMismatch("simplex map must be monotone");
  for (int v : m.image)
    if (v < 0 || v > m.dst + 1) throw ObjectMismatch("simplex map value out of range");
}

SimplexMap simplex_identity(int n) {
  SimplexMap m;
  m.src = m.dst = n;
  m.image.resize(n + 2);
  for (int i = 0; i < n + 2; ++i) m.image[i] = i;
  return m;
}

SimplexMap gen_d(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw IndexOutOfRange("d(" + std::to_string(i) + ")@" +
                                                     std::to_string(n));
  SimplexMap m;
  m.src = n;
  m.dst = n - 1;
  m.image.resize(n + 2);
  for (int x = 0; x < n + 2; ++x) m.image[x] = x <= i ? x : x - 1;
  return m;
}

SimplexMap gen_s(int n, int i) {
  if (n < 1 || i < 0 || i > n - 1)
    throw IndexOutOfRange("s(" + std::to_string(i) + ")@" + std::to_string(n));
  SimplexMap m;
  m.src = n - 1;
  m.dst = n;
  m.image.resize(n + 1);
  for (int x = 0; x < n + 1; ++x) m.image[x] = x <= i ? x : x + 1;
  return m;
}

SimplexMap compose_simplex(const SimplexMap& g, const SimplexMap& f) {
  if (f.dst != g.src)
    throw ObjectMismatch("cannot compose " + std::to_string(g.src) + "<-" +
                         std::to_string(g.dst) + " after " + std::to_string(f.src) + "->" +
                         std::to_string(f.dst));
  SimplexMap m;
  m.src = f.src;
  m.dst = g.dst;
  m.image.resize(f.image.size());
  for (size_t x = 0; x < f.image.size(); ++x) m.image[x] = g.image[f.image[x]];
  return m;
}

std::string SimplexMap::str() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < image.size(); ++i) {
    if (i) out << ' ';
    out << image[i];
  }
  out << "]@" << src << "->" << dst;
  return out.str();
}

void validate(const PartialMonotoneMap& m) {
  if (m.src < 0 || m.dst < 0 || m.image.size() != static_cast<size_t>(m.src))
    throw ObjectMismatch("bad partial map arity");
  int last = -1;
  for (int v : m.image) {
    if (v < -1 || v >= m.dst) throw ObjectMismatch("partial map value out of range");
    if (v >= 0) {
      if (v < last) throw ObjectMismatch("partial map must be monotone");
      last = v;
    }
  }
}

PartialMonotoneMap deltap_identity(int n) {
  PartialMonotoneMap m;
  m.src = m.dst = n;
  m.image.resize(n);
  for (int i = 0; i < n; ++i) m.image[i] = i;
  return m;
}

PartialMonotoneMap deltap_gen(DeltapGen kind, int n, int i) {
  PartialMonotoneMap m;
  switch (kind) {
    case DeltapGen::Delta:
      if (n < 0 || i < 0 || i > n) throw IndexOutOfRange("delta");
      m.src = n;
      m.dst = n + 1;
      m.image.resize(n);
      for (int x = 0; x < n; ++x) m.image[x] = x < i ? x : x + 1;
      return m;
    case DeltapGen::Sigma:
      if (n < 1 || i < 0 || i > n - 1) throw IndexOutOfRange("sigma");
      m.src = n + 1;
      m.dst = n;
      m.image.resize(n + 1);
      for (int x = 0; x < n + 1; ++x) m.image[x] = x <= i ? x : x - 1;
      return m;
    case DeltapGen::Rho:
      if (n < 0 || i < 0 || i > n) throw IndexOutOfRange("rho");
      m.src = n + 1;
      m.dst = n;
      m.image.resize(n + 1);
      for (int x = 0; x < n + 1; ++x) m.image[x] = x < i ? x : x == i ? -1 : x - 1;
      return m;
  }
  throw std::logic_error("bad kind");
}

PartialMonotoneMap compose_deltap(const PartialMonotoneMap& g, const PartialMonotoneMap& f) {
  if (f.dst != g.src) throw ObjectMismatch("partial maps do not compose");
  PartialMonotoneMap m;
  m.src = f.src;
  m.dst = g.dst;
  m.image.resize(f.src);
  for (int x = 0; x < f.src; ++x)
    m.image[x] = f.image[x] < 0 ? -1 : g.image[f.image[x]];
  return m;
}

std::string PartialMonotoneMap::str() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < image.size(); ++i) {
    if (i) out << ' ';
    if (image[i] < 0)
      out << '-';
    else
      out << image[i];
  }
  out << "]@" << src << "=>" << dst;
  return out.str();
}

PartialMonotoneMap hj(const SimplexMap& f) {
  PartialMonotoneMap m;
  m.src = f.src;
  m.dst = f.dst;
  m.image.resize(f.src);
  for (int x = 0; x < f.src; ++x) {
    int v = f.image[x + 1];
    m.image[x] = (v >= 1 && v <= f.dst) ? v - 1 : -1;
  }
  return m;
}

PartialMonotoneMap embed_total(const SimplexMap& f) {
  PartialMonotoneMap m;
  m.src = f.src + 2;
  m.dst = f.dst + 2;
  m.image = f.image;
  return m;
}

PartialMonotoneMap hj_via_generators(const SimplexMap& f) {
  int n = f.src + 2, mm = f.dst + 2;
  PartialMonotoneMap inner = embed_total(f);
  PartialMonotoneMap pre =
      compose_deltap(deltap_gen(DeltapGen::Delta, n - 1, n - 1),
                     deltap_gen(DeltapGen::Delta, n - 2, 0));
  PartialMonotoneMap post =
      compose_deltap(deltap_gen(DeltapGen::Rho, mm - 2, 0),
                     deltap_gen(DeltapGen::Rho, mm - 1, mm - 1));
  return compose_deltap(post, compose_deltap(inner, pre));
}

std::vector<SimplexMap> enumerate_homs(HomCat cat, int n, int m) {
  (void)cat;  // both presentations share the stored representation
  if (n > 8 || m > 8) throw TooLarge("enumerate_homs limited to 8 points");
  std::vector<SimplexMap> out;
  SimplexMap cur;
  cur.src = n;
  cur.dst = m;
  cur.image.assign(n + 2, 0);
  cur.image[n + 1] = m + 1;
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos == n + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = low; v <= m + 1; ++v) {
      cur.image[pos] = v;
      self(self, pos + 1, v);
    }
  };
  if (n + 1 >= 1) rec(rec, 1, 0);
  // drop maps whose last interior point exceeds the fixed endpoint
  std::vector<SimplexMap> ok;
  for (SimplexMap& s : out) {
    if (s.image[n] <= m + 1 && s.image[n + 1] == m + 1) {
      validate(s);
      ok.push_back(std::move(s));
    }
  }
  return ok;
}

namespace {

std::string row_points(int count, const std::vector<bool>& filled, const char* label) {
  std::ostringstream out;
  out << label;
  for (int i = 0; i < count; ++i) {
    out << (filled[i] ? '*' : 'o') << i;
    if (i + 1 < count) out << ' ';
  }
  return out.str();
}

std::string edges_row(int srccount, const std::vector<int>& img, const char* label) {
  std::ostringstream out;
  out << label;
  for (int i = 0; i < srccount; ++i) {
    int v = img[i];
    if (v < 0)
      out << ' ';
    else if (v == i)
      out << '|';
    else if (v < i)
      out << '/';
    else
      out << '\\';
    if (i + 1 < srccount) out << "  ";
  }
  return out.str();
}

}  // namespace

std::string render_ascii(const SimplexMap& m) {
  std::vector<bool> src_filled(m.src + 2, true);
  std::vector<bool> dst_filled(m.dst + 2, false);
  for (int v : m.image) dst_filled[v] = true;
  std::ostringstream out;
  out << "map " << m.str() << "\n";
  out << row_points(m.src + 2, src_filled, "src ") << "\n";
  out << edges_row(m.src + 2, m.image, "    ") << "\n";
  out << row_points(m.dst + 2, dst_filled, "dst ") << "\n";
  return out.str();
}

std::string render_ascii(const PartialMonotoneMap& m) {
  std::vector<bool> src_filled(m.src, false);
  std::vector<bool> dst_filled(m.dst, false);
  for (int i = 0; i < m.src; ++i)
    if (m.image[i] >= 0) {
      src_filled[i] = true;
      dst_filled[m.image[i]] = true;
    }
  std::ostringstream out;
  out << "map " << m.str() << "\n";
  out << row_points(m.src, src_filled, "src ") << "\n";
  out << edges_row(m.src, m.image, "    ") << "\n";
  out << row_points(m.dst, dst_filled, "dst ") << "\n";
  return out.str();
}

std::optional<SimplexMap> parse_rendered(const std::string& text) {
  auto pos = text.find("map [");
  if (pos == std::string::npos) return std::nullopt;
  auto end = text.find(']', pos);
  if (end == std::string::npos) return std::nullopt;
  std::istringstream nums(text.substr(pos + 5, end - pos - 5));
  SimplexMap m;
  int v;
  while (nums >> v) m.image.push_back(v);
  auto at = text.find('@', end);
  auto arrow = text.find("->", at);
  if (at == std::string::npos || arrow == std::string::npos) return std::nullopt;
  m.src = std::stoi(text.substr(at + 1, arrow - at - 1));
  auto rest = text.substr(arrow + 2);
  m.dst = std::stoi(rest);
  try {
    validate(m);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return m;
}

}  // namespace smi
