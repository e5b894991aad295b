#include "regcalc/atlas.hpp"

#include "regcalc/error.hpp"

#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace regcalc {

namespace {

bool is_left(AbsorbMode m) {
  return m == AbsorbMode::left || m == AbsorbMode::full_left || m == AbsorbMode::full;
}
bool is_right(AbsorbMode m) {
  return m == AbsorbMode::right || m == AbsorbMode::full_right || m == AbsorbMode::full;
}
bool is_full(AbsorbMode m) {
  return m == AbsorbMode::full_left || m == AbsorbMode::full_right || m == AbsorbMode::full;
}

constexpr TransitionTag B = TransitionTag::b;

}  // namespace

std::string to_string(TransitionTag tag) { return tag == TransitionTag::b ? "B" : "Ck"; }

std::string to_string(AbsorbMode mode) {
  switch (mode) {
    case AbsorbMode::left: return "left";
    case AbsorbMode::right: return "right";
    case AbsorbMode::full_left: return "full_left";
    case AbsorbMode::full_right: return "full_right";
    case AbsorbMode::full: return "full";
    case AbsorbMode::none: return "none";
  }
  return "?";
}

AbsorbMode parse_absorb_mode(std::string_view text) {
  if (text == "left") return AbsorbMode::left;
  if (text == "right") return AbsorbMode::right;
  if (text == "full_left" || text == "full-left") return AbsorbMode::full_left;
  if (text == "full_right" || text == "full-right") return AbsorbMode::full_right;
  if (text == "full") return AbsorbMode::full;
  if (text == "none") return AbsorbMode::none;
  throw DomainError("unknown absorption mode '" + std::string(text) + "'");
}

TransitionTag absorb_compose(TransitionTag g, TransitionTag f, AbsorbMode mode, bool ordered) {
  if (g == B && f == B) {
    if (!ordered) throw OrderedRequired("B∘B stays B only for ordered families");
    return B;
  }
  if (f == B && is_left(mode)) return B;
  if (g == B && is_right(mode)) return B;
  return TransitionTag::ck;
}

Atlas::Atlas(int charts) : m_(charts) {
  if (charts < 1) throw DomainError("an atlas needs at least one chart");
  for (int i = 0; i < m_; ++i) labels_.push_back(std::to_string(i));
  overlap_.assign(static_cast<std::size_t>(m_ * m_), 0);
  tags_.assign(static_cast<std::size_t>(m_ * m_), TransitionTag::ck);
  for (int i = 0; i < m_; ++i) {
    overlap_[at(i, i)] = 1;
    tags_[at(i, i)] = B;
  }
}

Atlas::Atlas(std::vector<std::string> labels) : Atlas(static_cast<int>(labels.size())) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw DomainError("duplicate chart label '" + l + "'");
  }
  labels_ = std::move(labels);
}

std::size_t Atlas::at(int i, int j) const { return static_cast<std::size_t>(i * m_ + j); }

void Atlas::check_chart(int i) const {
  if (i < 0 || i >= m_) throw DomainError("chart " + std::to_string(i) + " out of range");
}

const std::string& Atlas::label(int i) const {
  check_chart(i);
  return labels_[static_cast<std::size_t>(i)];
}

bool Atlas::has_default_labels() const {
  for (int i = 0; i < m_; ++i) {
    if (labels_[static_cast<std::size_t>(i)] != std::to_string(i)) return false;
  }
  return true;
}

void Atlas::add_overlap(int i, int j) {
  check_chart(i);
  check_chart(j);
  if (i == j || overlap_[at(i, j)]) return;
  overlap_[at(i, j)] = overlap_[at(j, i)] = 1;
  tags_[at(i, j)] = tags_[at(j, i)] = TransitionTag::ck;
}

void Atlas::set_tag(int i, int j, TransitionTag tag) {
  check_chart(i);
  check_chart(j);
  if (!overlap_[at(i, j)]) {
    throw DomainError("charts " + label(i) + " and " + label(j) + " do not overlap");
  }
  if (i == j && tag != B) throw DomainError("identity transitions are B");
  tags_[at(i, j)] = tags_[at(j, i)] = tag;
}

bool Atlas::overlaps(int i, int j) const {
  check_chart(i);
  check_chart(j);
  return overlap_[at(i, j)] != 0;
}

TransitionTag Atlas::tag(int i, int j) const {
  if (!overlaps(i, j)) {
    throw DomainError("no transition between charts " + label(i) + " and " + label(j));
  }
  return tags_[at(i, j)];
}

std::vector<std::pair<int, int>> Atlas::overlapping_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      if (overlap_[at(i, j)]) out.emplace_back(i, j);
    }
  }
  return out;
}

void Atlas::validate() const {
  for (int i = 0; i < m_; ++i) {
    if (!overlap_[at(i, i)]) throw DomainError("overlap relation is not reflexive");
    if (tags_[at(i, i)] != B) throw DomainError("identity transition of " + label(i) + " is not B");
    for (int j = 0; j < m_; ++j) {
      if (overlap_[at(i, j)] != overlap_[at(j, i)]) throw DomainError("overlap relation is not symmetric");
      if (overlap_[at(i, j)] && tags_[at(i, j)] != tags_[at(j, i)]) {
        throw DomainError("transition tags are not inverse-closed");
      }
    }
  }
}

bool check_b_structure(const Atlas& atlas) {
  for (auto [i, j] : atlas.overlapping_pairs()) {
    if (atlas.tag(i, j) != B) return false;
  }
  return true;
}

Atlas retract_atlas(const Atlas& atlas, AbsorbMode mode) {
  atlas.validate();
  auto charts = atlas.overlapping_pairs();  // (i, j) stands for the chart (j;i)
  std::vector<std::string> labels;
  labels.reserve(charts.size());
  for (auto [i, j] : charts) labels.push_back(atlas.label(j) + ";" + atlas.label(i));
  Atlas out(std::move(labels));

  auto word_tag = [&](int i, int j, int k, int l) {
    // r̄(φ_kl) ∘ φ_li ∘ r̄(φ_ji)⁻¹; the retracted factors are B.
    TransitionTag middle = atlas.tag(l, i);
    TransitionTag inner_first = absorb_compose(B, absorb_compose(middle, B, mode, true), mode, true);
    TransitionTag outer_first = absorb_compose(absorb_compose(B, middle, mode, true), B, mode, true);
    if (inner_first != outer_first || inner_first != B) {
      throw NotAbsorbing("transition " + atlas.label(j) + ";" + atlas.label(i) + " -> " +
                         atlas.label(k) + ";" + atlas.label(l) + " is not B under mode " +
                         to_string(mode) + " (inner-first " + to_string(inner_first) +
                         ", outer-first " + to_string(outer_first) + ")");
    }
    return inner_first;
  };

  const int n = static_cast<int>(charts.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      auto [i, j] = charts[static_cast<std::size_t>(a)];
      auto [l, k] = charts[static_cast<std::size_t>(b)];
      const int ids[4] = {i, j, k, l};
      bool clique = true;
      for (int x : ids) {
        for (int y : ids) clique = clique && atlas.overlaps(x, y);
      }
      if (!clique) continue;
      TransitionTag forward = word_tag(i, j, k, l);
      TransitionTag backward = word_tag(l, k, j, i);
      if (forward != backward) throw NotAbsorbing("retracted transitions are not inverse-closed");
      out.add_overlap(a, b);
      out.set_tag(a, b, forward);
    }
  }
  return out;
}

Atlas atlas_coproduct(const Atlas& a, const Atlas& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("0." + l);
  for (const auto& l : b.labels()) labels.push_back("1." + l);
  Atlas out(std::move(labels));
  for (auto [i, j] : a.overlapping_pairs()) {
    if (i == j) continue;
    out.add_overlap(i, j);
    out.set_tag(i, j, a.tag(i, j));
  }
  for (auto [i, j] : b.overlapping_pairs()) {
    if (i == j) continue;
    out.add_overlap(a.size() + i, a.size() + j);
    out.set_tag(a.size() + i, a.size() + j, b.tag(i, j));
  }
  return out;
}

Atlas atlas_product(const Atlas& a, const Atlas& b) {
  std::vector<std::string> labels;
  for (const auto& x : a.labels()) {
    for (const auto& y : b.labels()) labels.push_back("(" + x + "," + y + ")");
  }
  Atlas out(std::move(labels));
  auto id = [&](int i, int k) { return i * b.size() + k; };
  for (auto [i, j] : a.overlapping_pairs()) {
    for (auto [k, l] : b.overlapping_pairs()) {
      if (id(i, k) == id(j, l)) continue;
      out.add_overlap(id(i, k), id(j, l));
      bool both_b = a.tag(i, j) == B && b.tag(k, l) == B;
      out.set_tag(id(i, k), id(j, l), both_b ? B : TransitionTag::ck);
    }
  }
  return out;
}

FiniteMagma::FiniteMagma(std::vector<MagmaElement> elements, std::vector<int> table, int star)
    : elements_(std::move(elements)), table_(std::move(table)), star_(star) {
  if (table_.size() != elements_.size() * elements_.size()) {
    throw DomainError("magma table has the wrong size");
  }
}

const MagmaElement& FiniteMagma::element(int id) const {
  return elements_.at(static_cast<std::size_t>(id));
}

bool FiniteMagma::composable(int g, int f) const {
  return table_[static_cast<std::size_t>(g) * elements_.size() + static_cast<std::size_t>(f)] >= 0;
}

int FiniteMagma::compose(int g, int f) const {
  int r = table_[static_cast<std::size_t>(g) * elements_.size() + static_cast<std::size_t>(f)];
  return r >= 0 ? r : star_;
}

std::string FiniteMagma::describe(int id) const {
  const auto& e = element(id);
  if (e.star) return "id_*";
  return "(" + std::to_string(e.src) + "->" + std::to_string(e.dst) + "," + to_string(e.tag) + ")";
}

FiniteMagma transition_magma(const Atlas& atlas, AbsorbMode mode, bool ordered) {
  std::vector<MagmaElement> elements;
  std::map<std::tuple<int, int, TransitionTag>, int> index;
  for (auto [i, j] : atlas.overlapping_pairs()) {
    for (TransitionTag t : {TransitionTag::ck, B}) {
      index[{i, j, t}] = static_cast<int>(elements.size());
      elements.push_back({i, j, t, false});
    }
  }
  const int star = static_cast<int>(elements.size());
  elements.push_back({0, 0, B, true});

  const std::size_t n = elements.size();
  std::vector<int> table(n * n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      const auto& eg = elements[g];
      const auto& ef = elements[f];
      if (eg.star || ef.star) continue;
      if (ef.dst != eg.src || !atlas.overlaps(ef.src, eg.dst)) continue;
      TransitionTag t = absorb_compose(eg.tag, ef.tag, mode, ordered);
      table[g * n + f] = index.at({ef.src, eg.dst, t});
    }
  }
  return FiniteMagma(std::move(elements), std::move(table), star);
}

std::vector<int> b_elements(const FiniteMagma& magma) {
  std::vector<int> out;
  for (int id = 0; id < static_cast<int>(magma.size()); ++id) {
    const auto& e = magma.element(id);
    if (!e.star && e.tag == B) out.push_back(id);
  }
  return out;
}

LawReport check_ideal(const FiniteMagma& magma, const std::vector<int>& subset, IdealSide side) {
  LawReport report{side == IdealSide::left    ? "left_ideal"
                   : side == IdealSide::right ? "right_ideal"
                                              : "ideal"};
  std::vector<char> member(magma.size(), 0);
  for (int id : subset) member.at(static_cast<std::size_t>(id)) = 1;
  const int n = static_cast<int>(magma.size());
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      if (!magma.composable(g, f)) continue;
      // Left ideal: M ∘ I ⊆ I (the right factor is in I); right ideal: I ∘ M ⊆ I.
      bool applies = (side != IdealSide::right && member[static_cast<std::size_t>(f)]) ||
                     (side != IdealSide::left && member[static_cast<std::size_t>(g)]);
      if (!applies) continue;
      ++report.checked;
      int r = magma.compose(g, f);
      if (!member[static_cast<std::size_t>(r)]) {
        report.counterexamples.push_back({{ExtIndex(g), ExtIndex(f), ExtIndex(r)},
                                          std::nullopt,
                                          std::nullopt,
                                          magma.describe(g) + " o " + magma.describe(f) + " = " +
                                              magma.describe(r) + " leaves the subset"});
      }
    }
  }
  return report;
}

HomBijectionResult hom_bijection_check(const Atlas& plain, const Atlas& bstructured,
                                       const std::vector<FormalMorphism>& morphisms,
                                       AbsorbMode mode) {
  if (mode == AbsorbMode::none) throw DomainError("hom_bijection_check needs an absorbing mode");
  HomBijectionResult result;
  result.law.law = "hom_bijection";
  if (!check_b_structure(bstructured)) {
    result.law.counterexamples.push_back({{}, std::nullopt, std::nullopt, "target atlas is not B-structured"});
    return result;
  }
  const bool right_side = mode == AbsorbMode::right || mode == AbsorbMode::full_right;
  const AbsorbMode retract_mode = right_side ? AbsorbMode::right : AbsorbMode::left;
  Atlas retracted = retract_atlas(plain, retract_mode);
  auto charts = plain.overlapping_pairs();

  // Relocalised tags against the retracted charts (j;i).
  auto relocalised_b = [&](const FormalMorphism& f, std::size_t id) {
    bool all_b = true;
    const int expect_rows = right_side ? bstructured.size() : plain.size();
    const int expect_cols = right_side ? plain.size() : bstructured.size();
    if (f.rows != expect_rows || f.cols != expect_cols) {
      throw DomainError("morphism '" + f.name + "' has local tags of the wrong shape");
    }
    for (std::size_t a = 0; a < charts.size(); ++a) {
      const int i = charts[a].first;
      for (int c = 0; c < bstructured.size(); ++c) {
        ++result.law.checked;
        TransitionTag t = right_side ? absorb_compose(B, f.tag(c, i), mode, true)
                                     : absorb_compose(f.tag(i, c), B, mode, true);
        if (t != B) {
          all_b = false;
          result.law.counterexamples.push_back(
              {{ExtIndex(static_cast<std::int64_t>(id)), ExtIndex(static_cast<std::int64_t>(a)), ExtIndex(c)},
               std::nullopt,
               std::nullopt,
               "morphism '" + f.name + "' is not B against charts " + retracted.label(static_cast<int>(a)) +
                   " and " + bstructured.label(c)});
        }
      }
    }
    return all_b;
  };

  std::set<std::size_t> hom_ck;  // C^k side of the bijection
  std::set<std::size_t> hom_b;   // B side: morphisms out of the retracted atlas
  for (std::size_t id = 0; id < morphisms.size(); ++id) {
    const auto& f = morphisms[id];
    if (!f.iso && !is_full(mode)) {
      result.excluded.push_back(id);
      continue;
    }
    result.included.push_back(id);
    hom_ck.insert(id);
    if (relocalised_b(f, id)) hom_b.insert(id);
  }

  // ξ(f) = f and ι(f) = f; both must be total and mutually inverse.
  std::map<std::size_t, std::size_t> xi;
  std::map<std::size_t, std::size_t> iota;
  for (std::size_t f : hom_ck) {
    if (hom_b.contains(f)) xi[f] = f;
  }
  for (std::size_t f : hom_b) {
    if (hom_ck.contains(f)) iota[f] = f;
  }
  auto note = [&](const std::string& what) {
    result.law.counterexamples.push_back({{}, std::nullopt, std::nullopt, what});
  };
  if (xi.size() != hom_ck.size()) note("xi is not total on the C^k hom-set");
  if (iota.size() != hom_b.size()) note("iota is not total on the B hom-set");
  for (auto [f, g] : xi) {
    auto it = iota.find(g);
    if (it == iota.end() || it->second != f) note("iota o xi is not the identity");
  }
  for (auto [f, g] : iota) {
    auto it = xi.find(g);
    if (it == xi.end() || it->second != f) note("xi o iota is not the identity");
  }
  return result;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

}  // namespace

Atlas parse_atlas(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::optional<int> declared;
  std::vector<std::string> labels;
  struct Pending {
    int line;
    std::string kind;
    std::string a, b;
    std::optional<TransitionTag> tag;
  };
  std::vector<Pending> pending;

  auto fail = [&](const std::string& msg) -> void {
    throw FormatError("atlas line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    auto words = tokens(raw.substr(0, hash));
    if (words.empty()) continue;
    if (!declared) {
      if (words[0] != "atlas" || words.size() != 2) fail("expected header 'atlas <m>'");
      try {
        std::size_t used = 0;
        int m = std::stoi(words[1], &used);
        if (used != words[1].size() || m < 1) fail("chart count must be a positive integer");
        declared = m;
      } catch (const std::logic_error&) {
        fail("chart count must be a positive integer");
      }
      continue;
    }
    if (words[0] == "chart") {
      if (words.size() != 2) fail("expected 'chart <label>'");
      labels.push_back(words[1]);
    } else if (words[0] == "overlap") {
      if (words.size() != 3) fail("expected 'overlap <i> <j>'");
      pending.push_back({line_no, "overlap", words[1], words[2], std::nullopt});
    } else if (words[0] == "trans") {
      if (words.size() != 4) fail("expected 'trans <i> <j> tag=(B|Ck)'");
      std::optional<TransitionTag> tag;
      if (words[3] == "tag=B") tag = B;
      if (words[3] == "tag=Ck") tag = TransitionTag::ck;
      if (!tag) fail("unknown tag '" + words[3] + "'");
      pending.push_back({line_no, "trans", words[1], words[2], tag});
    } else {
      fail("unknown directive '" + words[0] + "'");
    }
  }
  if (!declared) throw FormatError("empty atlas file");
  if (!labels.empty() && static_cast<int>(labels.size()) != *declared) {
    throw FormatError("atlas declares " + std::to_string(*declared) + " charts but labels " +
                      std::to_string(labels.size()));
  }
  Atlas atlas = labels.empty() ? Atlas(*declared) : Atlas(labels);
  std::map<std::string, int> ids;
  for (int i = 0; i < atlas.size(); ++i) ids[atlas.label(i)] = i;

  // trans lines only tag declared overlaps; every overlap defaults to Ck.
  std::map<std::pair<int, int>, TransitionTag> tagged;
  for (const auto& p : pending) {
    line_no = p.line;
    auto a = ids.find(p.a);
    auto b = ids.find(p.b);
    if (a == ids.end() || b == ids.end()) fail("unknown chart '" + (a == ids.end() ? p.a : p.b) + "'");
    if (p.kind == "overlap") {
      atlas.add_overlap(a->second, b->second);
      continue;
    }
    int i = std::min(a->second, b->second);
    int j = std::max(a->second, b->second);
    if (i == j) {
      if (*p.tag != B) fail("identity transitions are B");
      continue;
    }
    auto [it, inserted] = tagged.emplace(std::make_pair(i, j), *p.tag);
    if (!inserted && it->second != *p.tag) fail("conflicting tags for " + p.a + " and " + p.b);
  }
  for (const auto& [ij, tag] : tagged) {
    if (!atlas.overlaps(ij.first, ij.second)) {
      throw FormatError("trans between non-overlapping charts " + atlas.label(ij.first) + " and " +
                        atlas.label(ij.second));
    }
    atlas.set_tag(ij.first, ij.second, tag);
  }
  atlas.validate();
  return atlas;
}

std::string format_atlas(const Atlas& atlas) {
  std::ostringstream os;
  os << "atlas " << atlas.size() << '\n';
  const bool labelled = !atlas.has_default_labels();
  if (labelled) {
    for (const auto& l : atlas.labels()) os << "chart " << l << '\n';
  }
  auto pairs = atlas.overlapping_pairs();
  for (auto [i, j] : pairs) {
    if (i < j) os << "overlap " << atlas.label(i) << ' ' << atlas.label(j) << '\n';
  }
  for (auto [i, j] : pairs) {
    if (i < j) {
      os << "trans " << atlas.label(i) << ' ' << atlas.label(j) << " tag=" << to_string(atlas.tag(i, j))
         << '\n';
    }
  }
  return os.str();
}

}  // namespace regcalc
