#include "pwl/instance.hpp"

#include <json.hpp>

namespace pwl {

namespace {

using nlohmann::json;

Rational number_from_json(const json& node, const std::string& where) {
  if (node.is_string()) return parse_rational(node.get<std::string>());
  if (node.is_number_integer()) return Rational(static_cast<long>(node.get<std::int64_t>()), 1);
  if (node.is_number_float()) {
    throw Error(Errc::ParseError,
                where + ": floating-point literals are rejected; use decimal strings");
  }
  throw Error(Errc::ParseError, where + ": expected a numeric string");
}

std::vector<Rational> number_list(const json& node, const std::string& where) {
  if (!node.is_array()) throw Error(Errc::ParseError, where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(node.size());
  for (const auto& item : node) out.push_back(number_from_json(item, where));
  return out;
}

}  // namespace

PWLInstance parse_instance(const std::string& json_text) {
  json root = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) throw Error(Errc::ParseError, "malformed JSON instance");
  if (!root.is_object() || !root.contains("type")) {
    throw Error(Errc::ParseError, "instance must be an object with a \"type\"");
  }

  PWLInstance inst;
  std::string type = root["type"].get<std::string>();
  if (type == "univariate") {
    inst.type = PWLInstance::Type::Univariate;
    inst.univariate.breakpoints = number_list(root.at("breakpoints"), "breakpoints");
    inst.univariate.values = number_list(root.at("values"), "values");
    inst.univariate.validate();
    return inst;
  }
  if (type != "bivariate") {
    throw Error(Errc::ParseError, "unknown instance type: " + type);
  }

  inst.type = PWLInstance::Type::Bivariate;
  GridTriangulation& gt = inst.bivariate;
  gt.xbreaks = number_list(root.at("xbreaks"), "xbreaks");
  gt.ybreaks = number_list(root.at("ybreaks"), "ybreaks");
  const int n1 = static_cast<int>(gt.xbreaks.size()) - 1;
  const int n2 = static_cast<int>(gt.ybreaks.size()) - 1;

  const json& values = root.at("values");
  if (!values.is_array() || static_cast<int>(values.size()) != n1 + 1) {
    throw Error(Errc::ParseError, "values must have one row per xbreak");
  }
  gt.values.resize(n1 + 1, n2 + 1);
  for (int i = 0; i <= n1; ++i) {
    std::vector<Rational> row = number_list(values[i], "values");
    if (static_cast<int>(row.size()) != n2 + 1) {
      throw Error(Errc::ParseError, "values row length must match ybreaks");
    }
    for (int j = 0; j <= n2; ++j) gt.values(i, j) = row[j];
  }

  const json& diagonals = root.at("diagonals");
  if (!diagonals.is_array() || static_cast<int>(diagonals.size()) != n1) {
    throw Error(Errc::ParseError, "diagonals must have one row per x cell");
  }
  gt.diag.resize(n1, n2);
  for (int i = 0; i < n1; ++i) {
    if (!diagonals[i].is_array() || static_cast<int>(diagonals[i].size()) != n2) {
      throw Error(Errc::ParseError, "diagonals row length must match y cells");
    }
    for (int j = 0; j < n2; ++j) {
      std::string d = diagonals[i][j].get<std::string>();
      if (d == "swne") gt.diag(i, j) = static_cast<int>(Diag::Swne);
      else if (d == "senw") gt.diag(i, j) = static_cast<int>(Diag::Senw);
      else throw Error(Errc::ParseError, "diagonal entries must be \"swne\" or \"senw\"");
    }
  }
  gt.validate();
  return inst;
}

std::string instance_to_json(const PWLInstance& inst) {
  json root;
  if (inst.type == PWLInstance::Type::Univariate) {
    root["type"] = "univariate";
    json bp = json::array(), vals = json::array();
    for (const Rational& t : inst.univariate.breakpoints) bp.push_back(rational_string(t));
    for (const Rational& f : inst.univariate.values) vals.push_back(rational_string(f));
    root["breakpoints"] = std::move(bp);
    root["values"] = std::move(vals);
  } else {
    root["type"] = "bivariate";
    const GridTriangulation& gt = inst.bivariate;
    json xb = json::array(), yb = json::array(), vals = json::array(), diags = json::array();
    for (const Rational& t : gt.xbreaks) xb.push_back(rational_string(t));
    for (const Rational& t : gt.ybreaks) yb.push_back(rational_string(t));
    for (int i = 0; i <= gt.d1(); ++i) {
      json row = json::array();
      for (int j = 0; j <= gt.d2(); ++j) row.push_back(rational_string(gt.values(i, j)));
      vals.push_back(std::move(row));
    }
    for (int i = 0; i < gt.d1(); ++i) {
      json row = json::array();
      for (int j = 0; j < gt.d2(); ++j) {
        row.push_back(gt.diag_at(i, j) == Diag::Swne ? "swne" : "senw");
      }
      diags.push_back(std::move(row));
    }
    root["xbreaks"] = std::move(xb);
    root["ybreaks"] = std::move(yb);
    root["values"] = std::move(vals);
    root["diagonals"] = std::move(diags);
  }
  return root.dump(2) + "\n";
}

}  // namespace pwl
