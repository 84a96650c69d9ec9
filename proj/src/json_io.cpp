#include "framekit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace framekit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

Eigen::Index positive_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    fail(where, "expected a positive integer");
  return static_cast<Eigen::Index>(v.get<long long>());
}

Complex complex_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(where, "expected a complex number [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

std::vector<double> real_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number())
      fail(where + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

json frame_to_json(const Frame& f) {
  json vectors = json::array();
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < f.dim(); ++j)
      row.push_back(complex_to_json(f.synthesis()(j, i)));
    vectors.push_back(std::move(row));
  }
  return {{"dim", f.dim()}, {"vectors", std::move(vectors)}};
}

Frame frame_from_json(const json& j) {
  const Eigen::Index dim = positive_count(field(j, "dim", "frame"), "frame.dim");
  const json& vectors = field(j, "vectors", "frame");
  if (!vectors.is_array() || vectors.empty())
    fail("frame.vectors", "expected a nonempty array of vectors");
  Mat synth(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const std::string where = "frame.vectors[" + std::to_string(i) + "]";
    const json& row = vectors[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      fail(where, "expected " + std::to_string(dim) + " complex entries");
    for (std::size_t k = 0; k < row.size(); ++k)
      synth(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
          complex_from_json(row[k], where + "[" + std::to_string(k) + "]");
  }
  try {
    return Frame(std::move(synth));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    fail("frame", e.what());
  }
}

json projection_to_json(const Projection& p) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < p.size(); ++k)
      row.push_back(complex_to_json(p.matrix()(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"size", p.size()}, {"rank", p.rank()}, {"matrix", std::move(rows)}};
}

Projection projection_from_json(const json& j) {
  const Eigen::Index n =
      positive_count(field(j, "size", "projection"), "projection.size");
  const json& rank_field = field(j, "rank", "projection");
  if (!rank_field.is_number_integer() || rank_field.get<long long>() < 0)
    fail("projection.rank", "expected a nonnegative integer");
  const json& rows = field(j, "matrix", "projection");
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    fail("projection.matrix", "expected " + std::to_string(n) + " rows");
  Mat m(n, n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "projection.matrix[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || static_cast<Eigen::Index>(rows[i].size()) != n)
      fail(where, "expected " + std::to_string(n) + " complex entries");
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          complex_from_json(rows[i][k], where + "[" + std::to_string(k) + "]");
  }
  try {
    Projection p(std::move(m));
    if (p.rank() != rank_field.get<long long>())
      fail("projection.rank", "declared rank " +
                                  std::to_string(rank_field.get<long long>()) +
                                  " but matrix has rank " +
                                  std::to_string(p.rank()));
    return p;
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    fail("projection", e.what());
  }
}

AdmissibilityQuery admissibility_query_from_json(const json& j) {
  std::vector<double> a = real_list(field(j, "a", "query"), "query.a");
  const Eigen::Index m = positive_count(field(j, "M", "query"), "query.M");
  try {
    AdmissibilityQuery out{AdmissibleSequence(std::move(a), m), std::nullopt};
    if (auto it = j.find("lambda"); it != j.end() && !it->is_null())
      out.spectrum.emplace(real_list(*it, "query.lambda"));
    return out;
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    fail("query", e.what());
  }
}

json verdict_to_json(const Verdict& v) {
  json out = {{"admissible", v.admissible}};
  out["violated"] = v.violated ? json(*v.violated) : json(nullptr);
  return out;
}

json instance_report_json(const PaulsenInstance& inst, double ratio_chain4,
                          double ratio_chain2) {
  return {{"M", inst.input.dim()},
          {"N", inst.input.size()},
          {"eps", inst.eps},
          {"distance", inst.distance},
          {"iterations", inst.iterations},
          {"converged", inst.converged},
          {"bound_16eM", inst.bound_16eM},
          {"ratio_chain4", ratio_chain4},
          {"ratio_chain2", ratio_chain2},
          {"seed", inst.seed}};
}

}  // namespace framekit
