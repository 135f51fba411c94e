#include "gaifman/render.hpp"

#include <algorithm>

#include "json.hpp"

namespace gaifman {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"' || ch == '\\') {
      out.push_back('\\');
    }
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

const char* kind_name(node_kind kind) {
  switch (kind) {
    case node_kind::leaf:
      return "leaf";
    case node_kind::complete:
      return "complete";
    case node_kind::primitive:
      return "primitive";
  }
  return "?";
}

struct dot_writer {
  const two_structure& s;
  const render_options& opts;
  bool label_edges;
  std::string out;
  int counter = 0;

  struct rendered {
    std::string anchor;
    std::string cluster;  // empty when the child is not drawn as a cluster
  };

  const edge_style& style_for(class_ordinal ordinal) const {
    const auto& palette = opts.palette;
    if (ordinal < palette.size() && ordinal < 2) {
      return palette[ordinal];
    }
    if (palette.size() <= 2) {
      return palette[std::min<std::size_t>(ordinal, palette.size() - 1)];
    }
    return palette[2 + (ordinal - 2) % (palette.size() - 2)];
  }

  std::string edge_attrs(class_ordinal ordinal) const {
    const edge_style& st = style_for(ordinal);
    std::string attrs = "[style=" + st.line + ", color=" + quote(st.color);
    if (label_edges && ordinal != 0) {
      attrs += ", label=" + quote(s.class_info(ordinal).label());
    }
    attrs += "]";
    return attrs;
  }

  rendered emit(const clan_node& n, int indent) {
    std::string pad(indent, ' ');
    if (n.kind == node_kind::leaf) {
      std::string name = "n" + std::to_string(counter++);
      out += pad + name + " [shape=ellipse, label=" +
             quote(s.vertices()[n.members[0]].display) + "];\n";
      return {name, ""};
    }

    std::size_t nontrivial = 0;
    std::size_t trivial = 0;
    for (const clan_node& child : n.children) {
      (child.kind == node_kind::leaf ? trivial : nontrivial) += 1;
    }
    if (nontrivial > opts.expand_limit) {
      std::string name = "n" + std::to_string(counter++);
      out += pad + name + " [shape=box, label=" + quote(kind_name(n.kind)) + "];\n";
      return {name, ""};
    }

    const bool merge_trivial = trivial >= opts.others_limit;
    const int id = counter++;
    std::string cluster = "cluster_" + std::to_string(id);

    // One dot per drawn child, plus one for the merged leaves.
    std::vector<const clan_node*> drawn;
    std::vector<const clan_node*> merged;
    for (const clan_node& child : n.children) {
      if (merge_trivial && child.kind == node_kind::leaf) {
        merged.push_back(&child);
      } else {
        drawn.push_back(&child);
      }
    }
    const std::size_t slots = drawn.size() + (merged.empty() ? 0 : 1);
    auto dot_name = [&](std::size_t slot) {
      return "p" + std::to_string(id) + "_" + std::to_string(slot);
    };

    out += pad + "subgraph " + cluster + " {\n";
    out += pad + "  label=" + quote(kind_name(n.kind)) + ";\n";
    for (std::size_t i = 0; i < slots; ++i) {
      out += pad + "  " + dot_name(i) + " [shape=point];\n";
    }
    // Quotient edges between the child dots. Edges touching the merged dot
    // are drawn only when every merged leaf agrees on the class.
    auto slot_class = [&](std::size_t a, std::size_t b, class_ordinal* ordinal) {
      auto rep = [&](std::size_t slot) { return drawn[slot]->members[0]; };
      const bool a_merged = a >= drawn.size();
      const bool b_merged = b >= drawn.size();
      if (!a_merged && !b_merged) {
        *ordinal = s.color(rep(a), rep(b));
        return true;
      }
      const std::size_t real = a_merged ? b : a;
      class_ordinal first = s.color(merged[0]->members[0], rep(real));
      for (const clan_node* leaf : merged) {
        if (s.color(leaf->members[0], rep(real)) != first) {
          return false;
        }
      }
      *ordinal = first;
      return true;
    };
    for (std::size_t a = 0; a < slots; ++a) {
      for (std::size_t b = a + 1; b < slots; ++b) {
        class_ordinal ordinal = 0;
        if (slot_class(a, b, &ordinal)) {
          out += pad + "  " + dot_name(a) + " -- " + dot_name(b) + " " +
                 edge_attrs(ordinal) + ";\n";
        }
      }
    }
    out += pad + "}\n";

    for (std::size_t i = 0; i < drawn.size(); ++i) {
      rendered child = emit(*drawn[i], indent);
      std::string attrs = child.cluster.empty() ? "" : " [lhead=" + child.cluster + "]";
      out += pad + dot_name(i) + " -- " + child.anchor + attrs + ";\n";
    }
    if (!merged.empty()) {
      std::string others = "n" + std::to_string(counter++);
      out += pad + others + " [shape=ellipse, label=" +
             quote("Others (" + std::to_string(merged.size()) + ")") + "];\n";
      out += pad + dot_name(slots - 1) + " -- " + others + ";\n";
    }
    return {dot_name(0), cluster};
  }
};

ordered_json node_to_json(const clan_node& n, const two_structure& s) {
  ordered_json j;
  j["kind"] = kind_name(n.kind);
  if (n.kind == node_kind::complete) {
    const edge_class& c = s.class_info(n.complete_class);
    ordered_json cls;
    cls["ordinal"] = c.ordinal;
    cls["lo"] = c.lo;
    if (c.hi.has_value()) {
      cls["hi"] = *c.hi;
    } else {
      cls["hi"] = nullptr;
    }
    cls["label"] = c.label();
    j["class"] = cls;
  }
  std::vector<std::string> ids;
  ids.reserve(n.members.size());
  for (vertex_id v : n.members) {
    ids.push_back(s.vertices()[v].id);
  }
  std::sort(ids.begin(), ids.end());
  j["members"] = ids;
  j["children"] = ordered_json::array();
  for (const clan_node& child : n.children) {
    j["children"].push_back(node_to_json(child, s));
  }
  return j;
}

ordered_json scheme_to_json(const color_scheme& scheme) {
  ordered_json j;
  auto opt = [](std::optional<std::uint64_t> v) {
    return v.has_value() ? ordered_json(*v) : ordered_json(nullptr);
  };
  switch (scheme.kind()) {
    case scheme_kind::plain:
      j["mode"] = "plain";
      break;
    case scheme_kind::threshold:
      j["mode"] = "threshold";
      j["k"] = scheme.k();
      break;
    case scheme_kind::linear:
      j["mode"] = "linear";
      j["width"] = scheme.width();
      j["lower"] = scheme.lower();
      j["upper"] = opt(scheme.upper());
      break;
    case scheme_kind::exponential:
      j["mode"] = "exponential";
      j["base"] = scheme.base();
      j["lower"] = scheme.lower();
      j["upper"] = opt(scheme.upper());
      break;
  }
  return j;
}

}  // namespace

std::vector<edge_style> render_options::default_palette() {
  return {
      {"dashed", "gray50"},  {"solid", "black"},   {"solid", "#1b9e77"},
      {"solid", "#d95f02"},  {"solid", "#7570b3"}, {"solid", "#e7298a"},
      {"solid", "#66a61e"},  {"solid", "#e6ab02"}, {"solid", "#a6761d"},
      {"solid", "#666666"},
  };
}

std::string to_dot(const clan_tree& tree, const two_structure& s,
                   const render_options& opts) {
  dot_writer writer{s, opts, s.classes().size() > 2, "", 0};
  writer.out += "graph clans {\n";
  writer.out += "  graph [compound=true];\n";
  writer.emit(tree.root, 2);
  writer.out += "}\n";
  return writer.out;
}

std::string to_json(const clan_tree& tree, const two_structure& s,
                    const color_scheme& scheme, const elision_report& report) {
  ordered_json j;
  j["universe"] = s.size();
  j["scheme"] = scheme_to_json(scheme);
  ordered_json elided = ordered_json::array();
  for (const item& it : report.elided) {
    elided.push_back(it.id);
  }
  j["elided"] = elided;
  j["placeholder"] =
      report.placeholder.has_value() ? ordered_json(report.placeholder->id) : nullptr;
  j["root"] = node_to_json(tree.root, s);
  return j.dump(2) + "\n";
}

}  // namespace gaifman
