#include "degburgers/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace dgb {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int axis_of(const std::string& name) {
  if (name == "t") return 0;
  if (name == "x") return 1;
  if (name == "y") return 2;
  if (name == "u") return 3;
  throw std::invalid_argument("fixtures: bad component '" + name + "'");
}

}  // namespace

AlgebraFixtures load_algebra_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixtures file: " + path);
  AlgebraFixtures fx;
  std::string raw;
  enum class Mode { kTop, kField, kSubalgebra, kNormalizer } mode = Mode::kTop;
  std::string cur_name;
  VectorField cur_field;
  RatMat cur_rows;
  auto parse_row = [](const std::string& line) {
    std::istringstream ss(line);
    RatVec row;
    std::string tok;
    while (ss >> tok) row.push_back(parse_rational(tok));
    if (row.size() != 6) throw std::runtime_error("fixtures: expected 6 rationals: " + line);
    return row;
  };
  while (std::getline(in, raw)) {
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (mode == Mode::kField) {
      if (head == "end") {
        fx.fields[cur_name] = cur_field;
        mode = Mode::kTop;
        continue;
      }
      std::string coeff;
      int et, ex, ey, eu;
      ss >> coeff >> et >> ex >> ey >> eu;
      if (!ss) throw std::runtime_error("fixtures: bad field line: " + line);
      Poly4 mono;
      mono.add_term({et, ex, ey, eu}, parse_rational(coeff));
      auto ax = static_cast<size_t>(axis_of(head));
      cur_field.comp[ax] = cur_field.comp[ax] + mono;
      continue;
    }
    if (mode == Mode::kSubalgebra || mode == Mode::kNormalizer) {
      if (head == "end") {
        if (mode == Mode::kSubalgebra) {
          fx.subalgebras[cur_name] = LieSubspace(cur_rows);
          fx.subalgebra_ids_in_order.push_back(cur_name);
        } else {
          fx.normalizer_space[cur_name] = LieSubspace(cur_rows);
        }
        mode = Mode::kTop;
        continue;
      }
      cur_rows.push_back(parse_row(line));
      continue;
    }
    if (head == "version") {
      ss >> fx.version;
    } else if (head == "field") {
      ss >> cur_name;
      cur_field = VectorField{};
      mode = Mode::kField;
    } else if (head == "subalgebra") {
      ss >> cur_name;
      cur_rows.clear();
      mode = Mode::kSubalgebra;
    } else if (head == "normalizer") {
      ss >> cur_name;
      cur_rows.clear();
      mode = Mode::kNormalizer;
    } else if (head == "expect") {
      std::string id, what, val;
      ss >> id >> what >> val;
      if (what == "normalizer_dim") {
        fx.normalizer_dim[id] = std::stoi(val);
      } else if (what == "dim_a") {
        fx.dim_a[id] = (val == "inf") ? std::nullopt : std::optional<int>(std::stoi(val));
      } else {
        throw std::runtime_error("fixtures: unknown expectation '" + what + "'");
      }
    } else {
      throw std::runtime_error("fixtures: unknown directive '" + head + "'");
    }
  }
  if (mode != Mode::kTop) throw std::runtime_error("fixtures: unterminated block");
  return fx;
}

#ifndef DGB_DEFAULT_DATA_DIR
#define DGB_DEFAULT_DATA_DIR "data"
#endif

std::string default_data_dir() { return DGB_DEFAULT_DATA_DIR; }

}  // namespace dgb
