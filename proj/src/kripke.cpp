#include "modcube/kripke.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

#include <json.hpp>

#include "modcube/error.hpp"

namespace modcube {

Frame::Frame(unsigned worlds_, unsigned relations) : worlds(worlds_) {
  if (worlds == 0 || worlds > kMaxWorlds)
    throw Error(ErrorKind::UnknownWorld, "a frame needs between 1 and " +
                                             std::to_string(kMaxWorlds) + " worlds");
  succ.assign(relations, std::vector<WorldSet>(worlds, 0));
}

void Frame::add(Atom i, unsigned from, unsigned to) {
  if (i >= relations())
    throw Error(ErrorKind::IndexOutOfRange, "no relation " + std::to_string(i));
  if (from >= worlds || to >= worlds)
    throw Error(ErrorKind::UnknownWorld, "world out of range");
  succ[i][from] |= WorldSet{1} << to;
}

bool Frame::related(Atom i, unsigned from, unsigned to) const {
  return i < relations() && from < worlds && to < worlds &&
         ((succ[i][from] >> to) & 1u);
}

Frame Frame::decode(std::uint64_t code, unsigned worlds, unsigned relations) {
  Frame fr(worlds, relations);
  unsigned bit = 0;
  for (unsigned i = 0; i < relations; ++i)
    for (unsigned u = 0; u < worlds; ++u)
      for (unsigned v = 0; v < worlds; ++v, ++bit)
        if ((code >> bit) & 1u) fr.succ[i][u] |= WorldSet{1} << v;
  return fr;
}

WorldSet extension(const Formula& f, const Frame& fr, Valuation v) {
  WorldSet s = v & fr.all();
  for (auto it = f.prefix.rbegin(); it != f.prefix.rend(); ++it) {
    if (it->atom >= fr.relations())
      throw Error(ErrorKind::IndexOutOfRange,
                  "frame has no relation " + std::to_string(it->atom));
    const auto& r = fr.succ[it->atom];
    WorldSet next = 0;
    for (unsigned w = 0; w < fr.worlds; ++w) {
      const bool holds = it->kind == OpKind::Box ? (r[w] & ~s) == 0 : (r[w] & s) != 0;
      if (holds) next |= WorldSet{1} << w;
    }
    s = next;
  }
  return s;
}

bool eval(const Formula& f, const Frame& fr, Valuation v, unsigned w) {
  if (w >= fr.worlds)
    throw Error(ErrorKind::UnknownWorld, "world " + std::to_string(w) + " out of range");
  return (extension(f, fr, v) >> w) & 1u;
}

namespace {

// Smallest (valuation, world) falsifying ax on fr.
std::optional<std::pair<Valuation, unsigned>> falsify(const AxiomSentence& ax,
                                                      const Frame& fr) {
  const Valuation limit = fr.all();
  for (Valuation v = 0;; ++v) {
    const WorldSet bad = extension(ax.lhs, fr, v) & ~extension(ax.rhs, fr, v) & fr.all();
    if (bad) return std::make_pair(v, static_cast<unsigned>(std::countr_zero(bad)));
    if (v == limit) return std::nullopt;
  }
}

unsigned frame_bits(unsigned worlds, unsigned relations) {
  return relations * worlds * worlds;
}

void check_bits(unsigned worlds, unsigned relations) {
  if (frame_bits(worlds, relations) > kMaxFrameBits)
    throw Error(ErrorKind::ShapeMismatch,
                std::to_string(worlds) + " worlds with " + std::to_string(relations) +
                    " relations is too many frames to enumerate");
}

}  // namespace

bool valid_on(const AxiomSentence& ax, const Frame& fr) { return !falsify(ax, fr); }

std::vector<WorldSet> relation(const Frame& fr, const ModIndex& idx) {
  std::vector<WorldSet> cur(fr.worlds);
  for (unsigned w = 0; w < fr.worlds; ++w) cur[w] = WorldSet{1} << w;
  for (Atom a : idx) {
    if (a >= fr.relations())
      throw Error(ErrorKind::IndexOutOfRange, "frame has no relation " + std::to_string(a));
    for (unsigned w = 0; w < fr.worlds; ++w) {
      WorldSet next = 0;
      for (WorldSet s = cur[w]; s; s &= s - 1)
        next |= fr.succ[a][static_cast<unsigned>(std::countr_zero(s))];
      cur[w] = next;
    }
  }
  return cur;
}

bool geach_condition(const Frame& fr, const GeachAxiom& g) {
  const auto ra = relation(fr, g.a);
  const auto rb = relation(fr, g.b);
  const auto rc = relation(fr, g.c);
  const auto rd = relation(fr, g.d);
  for (unsigned w = 0; w < fr.worlds; ++w)
    for (WorldSet us = ra[w]; us; us &= us - 1) {
      const WorldSet bu = rb[static_cast<unsigned>(std::countr_zero(us))];
      for (WorldSet vs = rc[w]; vs; vs &= vs - 1)
        if ((bu & rd[static_cast<unsigned>(std::countr_zero(vs))]) == 0) return false;
    }
  return true;
}

unsigned relations_needed(const AxiomSentence& ax) {
  unsigned r = 1;
  for (const auto* f : {&ax.lhs, &ax.rhs})
    for (const auto& l : f->prefix) r = std::max(r, l.atom + 1);
  return r;
}

namespace {

bool violates(const GeachAxiom& g, const AxiomSentence& s, const Frame& fr) {
  return geach_condition(fr, g) && !valid_on(s, fr);
}

Countermodel finish(const AxiomSentence& ax, std::uint64_t code, unsigned worlds,
                    unsigned relations) {
  Frame fr = Frame::decode(code, worlds, relations);
  const auto hit = falsify(ax, fr);
  return {std::move(fr), hit->first, hit->second};
}

}  // namespace

namespace serial {

std::optional<Countermodel> countermodel_search(const AxiomSentence& ax,
                                                unsigned max_worlds) {
  const unsigned r = relations_needed(ax);
  for (unsigned k = 1; k <= max_worlds; ++k) {
    check_bits(k, r);
    const std::uint64_t total = std::uint64_t{1} << frame_bits(k, r);
    for (std::uint64_t code = 0; code < total; ++code)
      if (falsify(ax, Frame::decode(code, k, r))) return finish(ax, code, k, r);
  }
  return std::nullopt;
}

std::uint64_t soundness_violations(const GeachAxiom& g, unsigned max_worlds,
                                   unsigned relations) {
  const AxiomSentence s = geach_to_sentence(g);
  std::uint64_t count = 0;
  for (unsigned k = 1; k <= max_worlds; ++k) {
    check_bits(k, relations);
    const std::uint64_t total = std::uint64_t{1} << frame_bits(k, relations);
    for (std::uint64_t code = 0; code < total; ++code)
      if (violates(g, s, Frame::decode(code, k, relations))) ++count;
  }
  return count;
}

}  // namespace serial

namespace parallel {

std::optional<Countermodel> countermodel_search(const AxiomSentence& ax,
                                                unsigned max_worlds) {
  const unsigned r = relations_needed(ax);
  for (unsigned k = 1; k <= max_worlds; ++k) {
    check_bits(k, r);
    const std::int64_t total = std::int64_t{1} << frame_bits(k, r);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t code = 0; code < total; ++code)
      if (code < best &&
          falsify(ax, Frame::decode(static_cast<std::uint64_t>(code), k, r)))
        best = code;
    if (best != std::numeric_limits<std::int64_t>::max())
      return finish(ax, static_cast<std::uint64_t>(best), k, r);
  }
  return std::nullopt;
}

std::uint64_t soundness_violations(const GeachAxiom& g, unsigned max_worlds,
                                   unsigned relations) {
  const AxiomSentence s = geach_to_sentence(g);
  std::uint64_t count = 0;
  for (unsigned k = 1; k <= max_worlds; ++k) {
    check_bits(k, relations);
    const std::int64_t total = std::int64_t{1} << frame_bits(k, relations);
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (std::int64_t code = 0; code < total; ++code)
      if (violates(g, s, Frame::decode(static_cast<std::uint64_t>(code), k, relations)))
        ++count;
  }
  return count;
}

}  // namespace parallel

std::uint64_t sampled_soundness_violations(const GeachAxiom& g, unsigned worlds,
                                           unsigned relations, std::uint64_t samples,
                                           std::uint64_t seed) {
  const unsigned bits = frame_bits(worlds, relations);
  if (bits > 64)
    throw Error(ErrorKind::ShapeMismatch, "frame code does not fit 64 bits");
  const AxiomSentence s = geach_to_sentence(g);
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < samples; ++i)
    if (violates(g, s, Frame::decode(rng() & mask, worlds, relations))) ++count;
  return count;
}

std::string frame_to_json(const Frame& fr) {
  nlohmann::ordered_json j;
  j["worlds"] = fr.worlds;
  nlohmann::ordered_json rels = nlohmann::ordered_json::object();
  for (unsigned i = 0; i < fr.relations(); ++i) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (unsigned u = 0; u < fr.worlds; ++u)
      for (unsigned v = 0; v < fr.worlds; ++v)
        if (fr.related(i, u, v)) pairs.push_back({u, v});
    rels[std::to_string(i)] = std::move(pairs);
  }
  j["relations"] = std::move(rels);
  return j.dump();
}

Frame frame_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, std::string("frame is not valid JSON: ") + e.what());
  }
  try {
    const int worlds = j.at("worlds").get<int>();
    if (worlds <= 0)
      throw Error(ErrorKind::UnknownWorld, "a frame needs at least one world");
    const auto& rels = j.at("relations");
    if (!rels.is_object()) throw Error(ErrorKind::Io, "\"relations\" must be an object");
    unsigned count = 1;
    for (const auto& [key, _] : rels.items()) {
      std::size_t used = 0;
      const unsigned long i = std::stoul(key, &used);
      if (used != key.size()) throw Error(ErrorKind::Io, "relation key " + key + " is not an index");
      count = std::max<unsigned>(count, static_cast<unsigned>(i) + 1);
    }
    Frame fr(static_cast<unsigned>(worlds), count);
    for (const auto& [key, pairs] : rels.items())
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2)
          throw Error(ErrorKind::Io, "relation entries must be [u, v] pairs");
        const int u = p[0].get<int>();
        const int v = p[1].get<int>();
        if (u < 0 || v < 0)
          throw Error(ErrorKind::UnknownWorld, "negative world");
        fr.add(static_cast<Atom>(std::stoul(key)), static_cast<unsigned>(u),
               static_cast<unsigned>(v));
      }
    return fr;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, std::string("malformed frame: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Io, "relation keys must be indices");
  }
}

}  // namespace modcube
