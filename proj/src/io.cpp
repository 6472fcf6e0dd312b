#include "gdt/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "gdt/errors.hpp"

namespace gdt {

using nlohmann::json;

namespace {

InverseTemperature beta_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return InverseTemperature::pos_inf();
    if (s == "-inf") return InverseTemperature::neg_inf();
    throw ParseError("inverse temperature string must be \"inf\" or \"-inf\", got \"" + s + "\"");
  }
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v))
      throw ParseError("inverse temperature must be a finite number or \"inf\"/\"-inf\"");
    if (v == 0.0) return InverseTemperature::zero();
    return InverseTemperature::finite(v);
  }
  throw ParseError("inverse temperature must be a number or \"inf\"/\"-inf\"");
}

json beta_to_json(const InverseTemperature& beta) {
  switch (beta.kind()) {
    case InverseTemperature::Kind::PosInf: return "inf";
    case InverseTemperature::Kind::NegInf: return "-inf";
    case InverseTemperature::Kind::Zero: return 0;
    default: return beta.value();
  }
}

NodeKind kind_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "max") return NodeKind::Max;
  if (s == "min") return NodeKind::Min;
  if (s == "chance") return NodeKind::Chance;
  throw ParseError("node kind must be \"max\", \"min\" or \"chance\", got \"" + s + "\"");
}

// Shared shape checks and id assignment for both tree schemas. Iteration
// over the nodes object is in sorted key order, so ids are deterministic.
struct RawTree {
  int horizon = 0;
  std::string root;
  std::map<std::string, NodeId> ids;
  std::vector<std::string> names;           // by id
  std::vector<const json*> bodies;          // by id
};

RawTree raw_tree(const json& doc) {
  if (!doc.is_object()) throw ParseError("tree document must be a JSON object");
  RawTree raw;
  raw.horizon = doc.at("horizon").get<int>();
  raw.root = doc.at("root").get<std::string>();
  const json& nodes = doc.at("nodes");
  if (!nodes.is_object()) throw ParseError("\"nodes\" must be an object");
  for (auto it = nodes.begin(); it != nodes.end(); ++it) {
    raw.ids.emplace(it.key(), static_cast<NodeId>(raw.names.size()));
    raw.names.push_back(it.key());
    raw.bodies.push_back(&it.value());
  }
  if (raw.names.empty()) throw ParseError("tree has no nodes");
  if (!raw.ids.count(raw.root))
    throw ValidationError("root '" + raw.root + "' is not among the nodes");
  return raw;
}

std::vector<Edge> edges_from_json(const json& body, const RawTree& raw, const std::string& name) {
  std::vector<Edge> edges;
  if (!body.contains("edges")) return edges;
  const json& list = body.at("edges");
  if (!list.is_array()) throw ParseError("\"edges\" of node '" + name + "' must be an array");
  for (const json& ej : list) {
    Edge e;
    e.label = ej.at("label").get<std::string>();
    e.q = ej.at("q").get<double>();
    e.r = ej.at("r").get<double>();
    const std::string child = ej.at("child").get<std::string>();
    auto found = raw.ids.find(child);
    if (found == raw.ids.end())
      throw ValidationError("node '" + name + "' references unknown child '" + child + "'");
    e.child = found->second;
    edges.push_back(std::move(e));
  }
  return edges;
}

}  // namespace

DecisionTree build_tree(const json& doc) {
  try {
    RawTree raw = raw_tree(doc);
    DecisionTree tree;
    tree.horizon = raw.horizon;
    tree.root = raw.ids.at(raw.root);
    for (NodeId id = 0; id < raw.names.size(); ++id) {
      const json& body = *raw.bodies[id];
      Node node;
      node.name = raw.names[id];
      node.beta = beta_from_json(body.at("beta"));
      node.leaf_value = body.value("leaf_value", 0.0);
      node.edges = edges_from_json(body, raw, node.name);
      tree.nodes.push_back(std::move(node));
    }
    validate_tree(tree);
    return tree;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed tree document: ") + e.what());
  }
}

json tree_to_json(const DecisionTree& tree) {
  json nodes = json::object();
  for (const Node& node : tree.nodes) {
    json body;
    body["beta"] = beta_to_json(node.beta);
    body["leaf_value"] = node.leaf_value;
    json edges = json::array();
    for (const Edge& e : node.edges) {
      edges.push_back({{"label", e.label},
                       {"q", e.q},
                       {"r", e.r},
                       {"child", tree.nodes[e.child].name}});
    }
    body["edges"] = std::move(edges);
    nodes[node.name] = std::move(body);
  }
  return json{{"horizon", tree.horizon}, {"root", tree.nodes[tree.root].name}, {"nodes", nodes}};
}

TypedTree build_typed_tree(const json& doc) {
  try {
    RawTree raw = raw_tree(doc);
    TypedTree tree;
    tree.horizon = raw.horizon;
    tree.root = raw.ids.at(raw.root);
    for (NodeId id = 0; id < raw.names.size(); ++id) {
      const json& body = *raw.bodies[id];
      TypedNode node;
      node.name = raw.names[id];
      node.leaf_value = body.value("leaf_value", 0.0);
      node.edges = edges_from_json(body, raw, node.name);
      if (!node.edges.empty() || body.contains("kind")) node.kind = kind_from_json(body.at("kind"));
      tree.nodes.push_back(std::move(node));
    }
    validate_typed_tree(tree);
    return tree;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed tree document: ") + e.what());
  }
}

std::vector<InverseTemperature> betas_from_json(const DecisionTree& tree, const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("beta assignment must be a JSON object");
    std::vector<InverseTemperature> betas;
    betas.reserve(tree.size());
    for (const Node& node : tree.nodes) betas.push_back(node.beta);

    std::map<std::string, NodeId> ids;
    for (NodeId id = 0; id < tree.size(); ++id) ids.emplace(tree.nodes[id].name, id);
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      auto found = ids.find(it.key());
      if (found == ids.end())
        throw ValidationError("beta assignment names unknown node '" + it.key() + "'");
      betas[found->second] = beta_from_json(it.value());
    }
    for (NodeId id = 0; id < tree.size(); ++id)
      if (!tree.nodes[id].is_leaf() && !doc.contains(tree.nodes[id].name))
        throw ValidationError("beta assignment is missing internal node '" + tree.nodes[id].name + "'");
    return betas;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed beta assignment: ") + e.what());
  }
}

SampleModel model_from_json(const json& doc) {
  try {
    std::vector<std::string> support = doc.at("support").get<std::vector<std::string>>();
    std::vector<double> m = doc.at("m").get<std::vector<double>>();
    std::vector<double> q = doc.at("q").get<std::vector<double>>();
    std::vector<double> u = doc.at("u").get<std::vector<double>>();
    if (m.size() != support.size() || q.size() != support.size() || u.size() != support.size())
      throw ValidationError("support, m, q and u must have equal lengths");
    return make_sample_model(Distribution(support, std::move(m)),
                             Distribution(support, std::move(q)),
                             UtilityVector{support, std::move(u)});
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed sample model: ") + e.what());
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("cannot parse '" + path + "': " + e.what());
  }
}

DecisionTree load_tree(const std::string& path) { return build_tree(load_json(path)); }

TypedTree load_typed_tree(const std::string& path) { return build_typed_tree(load_json(path)); }

SampleModel load_model(const std::string& path) { return model_from_json(load_json(path)); }

json solve_result_to_json(const DecisionTree& tree, const SolveResult& result) {
  json nodes = json::object();
  for (NodeId id = 0; id < tree.size(); ++id) {
    const Node& node = tree.nodes[id];
    json body;
    body["value"] = result.value[id];
    body["log_partition"] =
        result.log_partition[id] ? json(*result.log_partition[id]) : json(nullptr);
    if (node.is_leaf()) {
      body["policy"] = nullptr;
    } else {
      json row = json::object();
      for (std::size_t i = 0; i < node.edges.size(); ++i)
        row[node.edges[i].label] = result.policy[id].prob(i);
      body["policy"] = std::move(row);
    }
    nodes[node.name] = std::move(body);
  }
  return json{{"root", tree.nodes[tree.root].name},
              {"root_value", result.value[tree.root]},
              {"nodes", nodes}};
}

std::string solve_result_to_csv(const DecisionTree& tree, const SolveResult& result) {
  std::ostringstream out;
  out << "node,value,log_z,edge,policy\n";
  for (NodeId id = 0; id < tree.size(); ++id) {
    const Node& node = tree.nodes[id];
    const std::string log_z =
        result.log_partition[id] ? format_double(*result.log_partition[id]) : "";
    if (node.is_leaf()) {
      out << node.name << ',' << format_double(result.value[id]) << ',' << log_z << ",,\n";
      continue;
    }
    for (std::size_t i = 0; i < node.edges.size(); ++i) {
      out << node.name << ',' << format_double(result.value[id]) << ',' << log_z << ','
          << node.edges[i].label << ',' << format_double(result.policy[id].prob(i)) << '\n';
    }
  }
  return out.str();
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

}  // namespace gdt
