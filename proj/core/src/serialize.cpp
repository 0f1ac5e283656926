#include "cokasch/serialize.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace cokasch {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
}

const json& member(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key))
    throw std::invalid_argument(where + " is missing the \"" + key + "\" key");
  return doc.at(key);
}

std::vector<i64> int_list(const json& value, const std::string& where) {
  if (!value.is_array()) throw std::invalid_argument(where + " must be an array of integers");
  std::vector<i64> out;
  for (const json& entry : value) {
    if (!entry.is_number_integer())
      throw std::invalid_argument(where + " must hold integers only");
    out.push_back(entry.get<i64>());
  }
  return out;
}

json matrix_rows(const IntMatrix& a) {
  json rows = json::array();
  for (int r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return rows;
}

IntMatrix matrix_from(const json& value, int cols, const std::string& where) {
  if (!value.is_array()) throw std::invalid_argument(where + " must be an array of rows");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < value.size(); ++r)
    rows.push_back(int_list(value[r], where + "[" + std::to_string(r) + "]"));
  for (const Vec& row : rows)
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument(where + " rows must have " + std::to_string(cols) + " entries");
  return IntMatrix::from_rows(rows, cols);
}

}  // namespace

std::string ring_to_json(const FiniteRing& ring) {
  const RingData& data = ring.data();
  json doc;
  doc["orders"] = data.orders;
  json mul = json::array();
  for (const auto& row : data.structure) {
    json line = json::array();
    for (const Vec& product : row) line.push_back(product);
    mul.push_back(line);
  }
  doc["mul"] = mul;
  doc["one"] = data.one;
  return doc.dump(2);
}

RingData ring_from_json(const std::string& text) {
  json doc = parse_document(text);
  RingData data;
  data.orders = int_list(member(doc, "orders", "ring"), "ring.orders");
  const json& mul = member(doc, "mul", "ring");
  if (!mul.is_array()) throw std::invalid_argument("ring.mul must be an array");
  for (std::size_t i = 0; i < mul.size(); ++i) {
    const json& line = mul[i];
    const std::string where = "ring.mul[" + std::to_string(i) + "]";
    if (!line.is_array()) throw std::invalid_argument(where + " must be an array");
    std::vector<Vec> products;
    for (std::size_t j = 0; j < line.size(); ++j)
      products.push_back(int_list(line[j], where + "[" + std::to_string(j) + "]"));
    data.structure.push_back(std::move(products));
  }
  data.one = int_list(member(doc, "one", "ring"), "ring.one");
  return data;
}

std::string module_to_json(const FiniteModule& m, const std::string& ring_name) {
  json doc;
  doc["ring"] = ring_name;
  doc["orders"] = m.gen_orders();
  json action = json::object();
  for (int k = 0; k < m.ring()->rank(); ++k) action[std::to_string(k)] = matrix_rows(m.action(k));
  doc["action"] = action;
  return doc.dump(2);
}

ModuleDescription module_from_json(const std::string& text) {
  json doc = parse_document(text);
  const json& ring = member(doc, "ring", "module");
  if (!ring.is_string()) throw std::invalid_argument("module.ring must be a ring name");
  ModuleDescription desc;
  desc.ring = ring.get<std::string>();
  desc.data.gen_orders = int_list(member(doc, "orders", "module"), "module.orders");
  const json& action = member(doc, "action", "module");
  if (!action.is_object())
    throw std::invalid_argument("module.action must map basis indices to matrices");
  const int rank = static_cast<int>(desc.data.gen_orders.size());
  for (std::size_t k = 0; k < action.size(); ++k) {
    const std::string key = std::to_string(k);
    if (!action.contains(key))
      throw std::invalid_argument("module.action is missing index \"" + key + "\"");
    desc.data.action.push_back(matrix_from(action.at(key), rank, "module.action[" + key + "]"));
  }
  return desc;
}

}  // namespace cokasch
