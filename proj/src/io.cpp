#include "hss/io.hpp"

#include <fstream>

#include <json.hpp>

namespace hss {

namespace {

using nlohmann::json;

json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::BadFile, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(Err::BadFile, "cannot parse '" + path + "': " + e.what());
  }
}

void store(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(Err::BadFile, "cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  if (!out) fail(Err::BadFile, "failed writing '" + path + "'");
}

cplx read_scalar(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number())
    fail(Err::BadFile, "'" + path + "': scalar entries must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json write_scalar(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

FiniteAbelianGroup read_group(const std::string& path) {
  json j = load(path);
  if (!j.is_object() || !j.contains("orders") || !j["orders"].is_array())
    fail(Err::BadFile, "'" + path + "': expected {\"orders\": [...]}");
  std::vector<long> orders;
  for (const auto& o : j["orders"]) {
    if (!o.is_number_integer())
      fail(Err::BadFile, "'" + path + "': orders must be integers");
    orders.push_back(o.get<long>());
  }
  return make_group(std::move(orders));
}

Algebra read_algebra(const std::string& path, double tolerance) {
  json j = load(path);
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    fail(Err::BadFile, "'" + path + "': expected an integer \"dim\"");
  const auto dim = j["dim"].get<long>();
  if (dim < 1)
    fail(Err::BadFile, "'" + path + "': dim must be at least 1");
  const auto d = static_cast<std::size_t>(dim);

  if (!j.contains("unit") || !j["unit"].is_array() || j["unit"].size() != d)
    fail(Err::BadFile,
         "'" + path + "': expected a \"unit\" array of length dim");
  std::vector<cplx> unit;
  for (const auto& u : j["unit"]) unit.push_back(read_scalar(u, path));

  std::vector<cplx> structure(d * d * d, cplx(0.0));
  if (!j.contains("structure") || !j["structure"].is_array())
    fail(Err::BadFile, "'" + path + "': expected a \"structure\" array");
  for (const auto& entry : j["structure"]) {
    if (!entry.is_array() || entry.size() != 5)
      fail(Err::BadFile,
           "'" + path + "': structure entries must be [i,j,k,re,im]");
    long idx[3];
    for (int p = 0; p < 3; ++p) {
      if (!entry[static_cast<std::size_t>(p)].is_number_integer())
        fail(Err::BadFile, "'" + path + "': structure indices must be integers");
      idx[p] = entry[static_cast<std::size_t>(p)].get<long>();
      if (idx[p] < 0 || idx[p] >= dim)
        fail(Err::BadFile, "'" + path + "': structure index out of range");
    }
    if (!entry[3].is_number() || !entry[4].is_number())
      fail(Err::BadFile, "'" + path + "': structure values must be numbers");
    structure[(static_cast<std::size_t>(idx[0]) * d +
               static_cast<std::size_t>(idx[1])) *
                  d +
              static_cast<std::size_t>(idx[2])] = {entry[3].get<double>(),
                                                   entry[4].get<double>()};
  }
  return Algebra::make(d, std::move(structure), std::move(unit), tolerance);
}

GAction read_action(const std::string& path, const FiniteAbelianGroup& group,
                    const Algebra& algebra) {
  json j = load(path);
  if (!j.is_object() || !j.contains("images") || !j["images"].is_array())
    fail(Err::BadFile, "'" + path + "': expected {\"images\": [...]}");
  std::vector<Vector> images;
  for (const auto& img : j["images"]) {
    if (!img.is_array())
      fail(Err::BadFile, "'" + path + "': each image must be a vector");
    Vector v(static_cast<Eigen::Index>(img.size()));
    for (std::size_t i = 0; i < img.size(); ++i)
      v(static_cast<Eigen::Index>(i)) = read_scalar(img[i], path);
    images.push_back(std::move(v));
  }
  return GAction::make(group, algebra, std::move(images));
}

LabeledSurface read_surface(const std::string& path,
                            const FiniteAbelianGroup& group) {
  json j = load(path);
  if (!j.is_object() || !j.contains("triangles") ||
      !j["triangles"].is_array() || !j.contains("gluings") ||
      !j["gluings"].is_array())
    fail(Err::BadFile,
         "'" + path + "': expected {\"triangles\": [...], \"gluings\": [...]}");

  std::vector<GroupElement> labels;
  for (const auto& tri : j["triangles"]) {
    if (!tri.is_object())
      fail(Err::BadFile, "'" + path + "': triangle entries must be objects");
    GroupElement label = group.identity();
    if (tri.contains("label")) {
      if (!tri["label"].is_array())
        fail(Err::BadFile, "'" + path + "': labels must be residue arrays");
      label.residues.clear();
      for (const auto& r : tri["label"]) {
        if (!r.is_number_integer())
          fail(Err::BadFile, "'" + path + "': residues must be integers");
        label.residues.push_back(r.get<long>());
      }
    }
    labels.push_back(std::move(label));
  }

  std::vector<Gluing> gluings;
  for (const auto& g : j["gluings"]) {
    if (!g.is_array() || g.size() != 2 || !g[0].is_array() ||
        g[0].size() != 2 || !g[1].is_array() || g[1].size() != 2 ||
        !g[0][0].is_number_integer() || !g[0][1].is_number_integer() ||
        !g[1][0].is_number_integer() || !g[1][1].is_number_integer())
      fail(Err::BadFile,
           "'" + path + "': gluings must be [[t,e],[t2,e2]] integer pairs");
    gluings.push_back(Gluing{Slot{g[0][0].get<int>(), g[0][1].get<int>()},
                             Slot{g[1][0].get<int>(), g[1][1].get<int>()}});
  }
  const std::size_t num_triangles = labels.size();
  return LabeledSurface::make(group, num_triangles, std::move(labels),
                              std::move(gluings));
}

void write_group(const std::string& path, const FiniteAbelianGroup& group) {
  store(path, json{{"orders", group.orders()}});
}

void write_algebra(const std::string& path, const Algebra& algebra) {
  const std::size_t d = algebra.dim();
  json unit = json::array();
  for (std::size_t i = 0; i < d; ++i)
    unit.push_back(write_scalar(algebra.unit()[static_cast<Eigen::Index>(i)]));
  json structure = json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        cplx v = algebra.c(i, j, k);
        if (v != cplx(0.0))
          structure.push_back(
              json::array({i, j, k, v.real(), v.imag()}));
      }
  store(path, json{{"dim", d}, {"unit", unit}, {"structure", structure}});
}

void write_action(const std::string& path, const GAction& action) {
  json images = json::array();
  for (const Vector& img : action.generator_images()) {
    json v = json::array();
    for (Eigen::Index i = 0; i < img.size(); ++i)
      v.push_back(write_scalar(img(i)));
    images.push_back(v);
  }
  store(path, json{{"images", images}});
}

void write_surface(const std::string& path, const LabeledSurface& surface) {
  json triangles = json::array();
  for (const GroupElement& label : surface.labels())
    triangles.push_back(json{{"label", label.residues}});
  json gluings = json::array();
  for (const Gluing& g : surface.gluings())
    gluings.push_back(json::array({json::array({g.a.tri, g.a.edge}),
                                   json::array({g.b.tri, g.b.edge})}));
  store(path, json{{"triangles", triangles}, {"gluings", gluings}});
}

}  // namespace hss
