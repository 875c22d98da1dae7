#include "rosecover/serialize.hpp"

#include <sstream>

#include "rosecover/error.hpp"

namespace rosecover {

std::string rational_to_string(const Rational &q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string &text) {
  auto bad = [&] { throw Error(Errc::Parse, "bad rational '" + text + "'"); };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+'))
    ++i;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9')
      ++j;
    return j;
  };
  const std::size_t num_end = digits(i);
  if (num_end == i)
    bad();
  std::size_t end = num_end;
  if (end < text.size() && text[end] == '/') {
    end = digits(num_end + 1);
    if (end == num_end + 1)
      bad();
  }
  if (end != text.size())
    bad();
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0 || sgn(q.get_den()) == 0)
    bad();
  q.canonicalize();
  return q;
}

QVector parse_rational_list(const std::string &text) {
  QVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    v.push_back(parse_rational(item));
  return v;
}

json to_json(const QVector &v) {
  json out = json::array();
  for (const auto &x : v)
    out.push_back(rational_to_string(x));
  return out;
}

json to_json(const QMatrix &m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const FiniteGroup &group) {
  return json{{"order", group.order()}, {"mul", group.mul_table()}, {"labels", group.labels()}};
}

json to_json(const EdgePath &path) {
  json steps = json::array();
  for (const auto &s : path.steps)
    steps.push_back({s.edge.vertex, s.edge.petal, s.forward ? 1 : -1});
  return json{{"start", path.start}, {"steps", steps}};
}

namespace {

json edge_list(const std::vector<Edge> &edges) {
  json out = json::array();
  for (const auto &e : edges)
    out.push_back({e.vertex, e.petal});
  return out;
}

template <typename T> T get_field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::Parse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &ex) {
    throw Error(Errc::Parse, std::string("field '") + key + "': " + ex.what());
  }
}

} // namespace

json to_json(const HomologyBasis &basis) {
  return json{{"root", basis.root()},
              {"rank", basis.rank()},
              {"tree", edge_list(basis.tree())},
              {"cotree", edge_list(basis.cotree())}};
}

json to_json(const LiftedSlide &lifted) {
  return json{{"petal", lifted.slide.petal},
              {"ell", format_word(lifted.slide.ell)},
              {"ell_class", to_json(lifted.ell_class)},
              {"matrix", to_json(lifted.matrix)}};
}

json to_json(const MoveCertificate &cert) {
  return json{{"petal", cert.petal},
              {"pairing_edge", {cert.pairing_edge.vertex, cert.pairing_edge.petal}},
              {"ell", format_word(cert.ell)},
              {"ell_class", to_json(cert.ell_class)},
              {"orbit_rank", cert.orbit_rank_value},
              {"increment", to_json(cert.increment)},
              {"matrix", to_json(cert.matrix)},
              {"iterates_checked", cert.iterates_checked}};
}

json to_json(const CharacterReport &report) {
  json traces = json::array();
  for (const auto &t : report.traces)
    traces.push_back(rational_to_string(t));
  return json{{"group_order", report.group_order}, {"rank", report.rank}, {"traces", traces},
              {"verdict", report.verdict}};
}

json to_json(const IsotypicReport &report) {
  json characters = json::array();
  for (std::size_t i = 0; i < report.characters.size(); ++i)
    characters.push_back(
        {{"name", report.characters[i].name}, {"values", report.characters[i].values}, {"dim", report.dims[i]}});
  return json{{"group_basis", report.group_basis}, {"characters", characters}, {"dims", report.dims}};
}

FiniteGroup group_from_json(const json &j, bool trusted) {
  const auto table = get_field<std::vector<std::vector<int>>>(j, "mul");
  if (j.contains("order") && get_field<std::size_t>(j, "order") != table.size())
    throw Error(Errc::Parse, "'order' does not match the size of 'mul'");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = get_field<std::vector<std::string>>(j, "labels");
  return FiniteGroup::from_mul_table(table, std::move(labels), trusted);
}

EdgePath edge_path_from_json(const json &j) {
  EdgePath path;
  path.start = get_field<Element>(j, "start");
  for (const auto &s : get_field<std::vector<std::vector<int>>>(j, "steps")) {
    if (s.size() != 3 || (s[2] != 1 && s[2] != -1))
      throw Error(Errc::Parse, "path step must be [g, i, +-1]");
    path.steps.push_back({Edge{s[0], s[1]}, s[2] == 1});
  }
  return path;
}

QVector vector_from_json(const json &j) {
  if (!j.is_array())
    throw Error(Errc::Parse, "expected an array of rationals");
  QVector v;
  for (const auto &x : j) {
    if (!x.is_string())
      throw Error(Errc::Parse, "rationals are encoded as strings");
    v.push_back(parse_rational(x.get<std::string>()));
  }
  return v;
}

QMatrix matrix_from_json(const json &j) {
  if (!j.is_array())
    throw Error(Errc::Parse, "expected an array of rows");
  std::vector<QVector> rows;
  for (const auto &r : j)
    rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto &r : rows)
    if (r.size() != cols)
      throw Error(Errc::Parse, "ragged matrix");
  return QMatrix::from_rows(rows, cols);
}

MoveCertificate certificate_from_json(const json &j) {
  MoveCertificate cert;
  cert.petal = get_field<int>(j, "petal");
  const auto pairing = get_field<std::vector<int>>(j, "pairing_edge");
  if (pairing.size() != 2)
    throw Error(Errc::Parse, "pairing_edge must be [g, j]");
  cert.pairing_edge = Edge{pairing[0], pairing[1]};
  cert.ell = parse_word(get_field<std::string>(j, "ell"));
  cert.ell_class = vector_from_json(j.at("ell_class"));
  cert.orbit_rank_value = get_field<std::size_t>(j, "orbit_rank");
  cert.increment = vector_from_json(j.at("increment"));
  cert.matrix = matrix_from_json(j.at("matrix"));
  cert.iterates_checked = get_field<int>(j, "iterates_checked");
  return cert;
}

} // namespace rosecover
