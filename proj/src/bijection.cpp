#include "latticeflaw/bijection.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace latticeflaw {

std::string to_string(PivotClass cls) {
  return cls == PivotClass::TailPivot ? "tail" : "prefix";
}

std::pair<LatticePath, LatticePath> split_at_last_nonterminal_boundary(
    const BoundarySpec& spec, const LatticePath& path) {
  require_member(path, spec);
  std::vector<PathPoint> contacts = non_terminal_boundary_points(path, spec);
  // The startpoint always qualifies, so the list is never empty.
  return split(path, contacts.back().index);
}

CanonicalSplit classify_domain(const BoundarySpec& spec,
                               const LatticePath& path) {
  require_member(path, spec);
  if (flaw_count(path, spec) == spec.max_flaws()) {
    throw std::domain_error(
        "flaw raising rejects a path that already has the maximum number "
        "of flaws");
  }
  auto [prefix, tail] = split_at_last_nonterminal_boundary(spec, path);
  const long long cut = prefix.size();
  const long long prefix_scale = cut / (spec.a + spec.b);
  const BoundarySpec tail_spec = spec.rescaled(spec.g - prefix_scale);

  long long prefix_flaws = 0;
  std::optional<ElevationClass> prefix_above;
  if (!prefix.empty()) {
    const BoundarySpec prefix_spec = spec.rescaled(prefix_scale);
    prefix_flaws = flaw_count(prefix, prefix_spec);
    prefix_above = lowest_points_above(prefix, prefix_spec);
  }
  if (!prefix.empty() && prefix_flaws == 0 &&
      flaw_count(tail, tail_spec) == tail_spec.max_flaws()) {
    throw std::domain_error(
        "flaw raising rejects a reducible path (flawless prefix meeting "
        "the line, then a max-flaw tail)");
  }

  // The tail touches the line only at its endpoints, so either it dips
  // below somewhere or it is entirely above (max-flaw tail). The latter
  // was excluded above except when the prefix has a flaw, which is
  // exactly the vacuous case of the prefix-pivot rule.
  auto tail_below = highest_points_below(tail, tail_spec);
  bool prefix_pivot =
      prefix_flaws > 0 &&
      (!tail_below || prefix_above->elevation < -tail_below->elevation);
  if (prefix_pivot) {
    long long pivot = prefix_above->points.back().index;
    return {PivotClass::PrefixPivot, split_at(path, pivot, cut)};
  }
  if (!tail_below) {
    throw std::logic_error(
        "internal: the tail of an accepted tail-pivot path must dip below "
        "the line");
  }
  long long pivot = cut + tail_below->points.back().index;
  return {PivotClass::TailPivot, split_at(path, cut, pivot)};
}

CanonicalSplit classify_codomain(const BoundarySpec& spec,
                                 const LatticePath& path) {
  require_member(path, spec);
  if (flaw_count(path, spec) == 0) {
    throw std::domain_error("flaw lowering rejects a flawless path");
  }
  auto above = lowest_points_above(path, spec);
  const std::vector<PathPoint>& marks = above->points;
  const long long last = marks.back().index;

  if (marks.size() >= 2) {
    const long long second_last = marks[marks.size() - 2].index;
    bool contact_free = true;
    for (const PathPoint& p : path_points(path)) {
      if (p.index > second_last && p.index < last &&
          elevation(p, spec) == 0) {
        contact_free = false;
        break;
      }
    }
    if (contact_free) {
      return {PivotClass::PrefixPivot, split_at(path, second_last, last)};
    }
  }

  // Last boundary contact strictly before the last lowest-above point;
  // the startpoint qualifies, so the search cannot come up empty.
  long long contact = 0;
  for (const PathPoint& p : boundary_points(path, spec)) {
    if (p.index >= last) break;
    contact = p.index;
  }
  return {PivotClass::TailPivot, split_at(path, contact, last)};
}

namespace {

LatticePath apply_swap(const CanonicalSplit& classified) {
  return concat(classified.split.parts[0], classified.split.parts[2],
                classified.split.parts[1]);
}

void write_trace(std::ostream& out, const LatticePath& input,
                 const CanonicalSplit& classified, const LatticePath& output) {
  nlohmann::json record{
      {"input", input.text()},
      {"class", to_string(classified.cls)},
      {"split_indices", classified.split.split_indices},
      {"output", output.text()}};
  out << record.dump() << '\n';
}

}  // namespace

LatticePath add_flaw(const BoundarySpec& spec, const LatticePath& path) {
  return apply_swap(classify_domain(spec, path));
}

LatticePath remove_flaw(const BoundarySpec& spec, const LatticePath& path) {
  return apply_swap(classify_codomain(spec, path));
}

namespace {

// True when the map rejected the path with a domain error.
template <typename Fn>
bool rejects(Fn&& fn) {
  try {
    fn();
    return false;
  } catch (const std::domain_error&) {
    return true;
  }
}

bool images_distinct(std::vector<LatticePath>& paths) {
  std::sort(paths.begin(), paths.end());
  return std::adjacent_find(paths.begin(), paths.end()) == paths.end();
}

}  // namespace

CheckReport verify_bijection(const BoundarySpec& spec,
                             const BijectionVerifyOptions& options) {
  CheckReport report;

  std::vector<std::vector<LatticePath>> by_flaws(
      static_cast<std::size_t>(spec.total_steps()));
  {
    PathEnumerator enumerator(spec, options.cap);
    while (auto path = enumerator.next()) {
      auto k = static_cast<std::size_t>(flaw_count(*path, spec));
      by_flaws[k].push_back(std::move(*path));
    }
  }
  const long long max_k = spec.max_flaws();

  {
    bool all_rejected = true;
    std::string detail;
    for (const LatticePath& path : by_flaws[static_cast<std::size_t>(max_k)]) {
      if (!rejects([&] { classify_domain(spec, path); })) {
        all_rejected = false;
        detail = "accepted " + path.text();
        break;
      }
    }
    report.add("raising map rejects max-flaw paths", all_rejected, detail);
  }
  {
    bool all_rejected = true;
    std::string detail;
    for (const LatticePath& path : by_flaws[0]) {
      if (!rejects([&] { classify_codomain(spec, path); })) {
        all_rejected = false;
        detail = "accepted " + path.text();
        break;
      }
    }
    report.add("lowering map rejects flawless paths", all_rejected, detail);
  }

  for (long long k = 0; k < max_k; ++k) {
    const auto& level = by_flaws[static_cast<std::size_t>(k)];
    const auto& next_level = by_flaws[static_cast<std::size_t>(k) + 1];
    bool ok = true;
    std::string detail;
    auto fail = [&](std::string message) {
      if (ok) {
        ok = false;
        detail = std::move(message);
      }
    };

    std::vector<LatticePath> images;
    long long reducible_count = 0;
    long long tail_domain = 0;
    long long prefix_domain = 0;
    for (const LatticePath& path : level) {
      if (is_reducible(path, spec)) {
        ++reducible_count;
        if (!rejects([&] { classify_domain(spec, path); })) {
          fail("raising map accepted reducible path " + path.text());
        }
        continue;
      }
      CanonicalSplit classified;
      try {
        classified = classify_domain(spec, path);
      } catch (const std::domain_error& e) {
        fail("raising map rejected " + path.text() + ": " + e.what());
        continue;
      }
      (classified.cls == PivotClass::TailPivot ? tail_domain
                                               : prefix_domain)++;
      LatticePath image = apply_swap(classified);
      if (options.trace != nullptr) {
        write_trace(*options.trace, path, classified, image);
      }
      if (image.east_count() != path.east_count() ||
          image.size() != path.size()) {
        fail("raising map changed the step multiset of " + path.text());
      } else if (flaw_count(image, spec) != k + 1) {
        fail("raising map sent " + path.text() + " to " + image.text() +
             " with " + std::to_string(flaw_count(image, spec)) + " flaws");
      } else {
        CanonicalSplit back = classify_codomain(spec, image);
        if (back.cls != classified.cls) {
          fail("class mismatch: " + path.text() + " went " +
               to_string(classified.cls) + " but its image classifies as " +
               to_string(back.cls));
        } else if (apply_swap(back) != path) {
          fail("lowering map did not undo the raising map on " + path.text());
        }
      }
      if (ok && classified.cls == PivotClass::TailPivot) {
        // The rearranged tail may touch the line only at its start.
        long long from = classified.split.split_indices[0];
        long long moved = path.size() - classified.split.split_indices[1];
        for (const PathPoint& p : boundary_points(image, spec)) {
          if (p.index >= from && p.index <= from + moved && p.index != from) {
            fail("rearranged tail of " + path.text() +
                 " touches the line at index " + std::to_string(p.index));
            break;
          }
        }
      }
      images.push_back(std::move(image));
    }

    if (ok && k == 0 && prefix_domain != 0) {
      fail("prefix pivots cannot occur on flawless inputs");
    }
    if (ok && !images_distinct(images)) {
      fail("raising map repeated an image");
    }
    if (ok && images.size() != next_level.size()) {
      fail("raising map produced " + std::to_string(images.size()) +
           " images for " + std::to_string(next_level.size()) +
           " paths on the next level");
    }

    std::vector<LatticePath> preimages;
    long long tail_codomain = 0;
    long long prefix_codomain = 0;
    for (const LatticePath& path : next_level) {
      CanonicalSplit classified;
      try {
        classified = classify_codomain(spec, path);
      } catch (const std::domain_error& e) {
        fail("lowering map rejected " + path.text() + ": " + e.what());
        continue;
      }
      (classified.cls == PivotClass::TailPivot ? tail_codomain
                                               : prefix_codomain)++;
      LatticePath preimage = apply_swap(classified);
      if (flaw_count(preimage, spec) != k) {
        fail("lowering map sent " + path.text() + " to " + preimage.text() +
             " with " + std::to_string(flaw_count(preimage, spec)) +
             " flaws");
      } else if (is_reducible(preimage, spec)) {
        fail("lowering map landed on reducible path " + preimage.text());
      } else if (add_flaw(spec, preimage) != path) {
        fail("raising map did not undo the lowering map on " + path.text());
      }
      preimages.push_back(std::move(preimage));
    }
    if (ok && !images_distinct(preimages)) {
      fail("lowering map repeated a preimage");
    }
    if (ok && (tail_domain != tail_codomain ||
               prefix_domain != prefix_codomain)) {
      fail("pivot class counts disagree: domain " +
           std::to_string(tail_domain) + "/" + std::to_string(prefix_domain) +
           ", codomain " + std::to_string(tail_codomain) + "/" +
           std::to_string(prefix_codomain));
    }

    if (ok) {
      detail = std::to_string(level.size()) + " paths, " +
               std::to_string(reducible_count) + " reducible, " +
               std::to_string(tail_domain) + " tail / " +
               std::to_string(prefix_domain) + " prefix pivots";
    }
    report.add("flaw level " + std::to_string(k), ok, detail);
  }

  return report;
}

}  // namespace latticeflaw
