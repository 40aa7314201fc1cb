#include "surfcalc/surfcalc.h"

#include <cstdint>
#include <cstring>
#include <string>

#include <json.hpp>

#include "exhaustion.hpp"
#include "mcgword.hpp"
#include "pants.hpp"
#include "shiftbasis.hpp"
#include "surface.hpp"

using nlohmann::json;
using namespace surfcalc;

struct sc_surface {
  surface::SurfaceSpec spec;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, converting exceptions to status codes.
template <typename F>
sc_status guarded(F&& body) {
  try {
    return body();
  } catch (const endspace::ParseError& e) {
    g_last_error = e.what();
    return SC_ERR_PARSE;
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return SC_ERR_PARSE;
  } catch (const endspace::FragmentExceeded& e) {
    g_last_error = e.what();
    return SC_ERR_FRAGMENT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SC_ERR_VALIDATION;
  } catch (const exhaustion::DepthZero& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const exhaustion::NotInfiniteType& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const exhaustion::InvalidExhaustion& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const exhaustion::UnknownCurve& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const pants::TooLarge& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const surface::NoGenusEnds& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const surface::BoundaryNotSupported& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const shiftbasis::FewerThanTwoGenusEnds& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const shiftbasis::WindowTooSmall& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const mcgword::IndexOutOfRange& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const mcgword::WindowSeparates& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const mcgword::GenusTooSmall& e) {
    g_last_error = e.what();
    return SC_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SC_ERR_INTERNAL;
  }
}

json violations_json(const std::vector<endspace::Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back({{"path", v.path}, {"message", v.message}});
  return arr;
}

std::string address_string(const shiftbasis::EndRef& e) {
  std::string s;
  for (std::size_t i = 0; i < e.address.size(); ++i) {
    if (i) s += "_";
    s += std::to_string(e.address[i]);
  }
  return s;
}

json finite_json(const surface::FiniteSurface& f) {
  return json{{"orientable", f.orientable},
              {"genus", f.genus},
              {"punctures", f.punctures},
              {"boundary", f.boundary}};
}

const surface::SurfaceSpec& validated(const sc_surface* s) {
  if (!s) throw std::invalid_argument("null surface handle");
  auto viol = surface::validate_surface(s->spec);
  if (!viol.empty()) {
    throw std::invalid_argument("surface spec invalid: " + viol.front().path + ": " +
                                viol.front().message);
  }
  return s->spec;
}

json rank_json(const endspace::EndCount& r) {
  if (r.infinite) return "countably_infinite";
  return r.n;
}

namespace {

json exhaustion_json(const exhaustion::PrincipalExhaustion& pe) {
  json levels = json::array();
  for (const auto& level : pe.levels) {
    json pieces = json::array();
    for (const auto& piece : level.pieces) {
      json p = finite_json(piece.surface);
      p["inherited"] = piece.inherited_boundary;
      p["new"] = piece.new_boundary;
      pieces.push_back(p);
    }
    json comps = json::array();
    for (const auto& comp : level.complements) {
      comps.push_back(json::parse(surface::spec_to_json(comp)));
    }
    levels.push_back({{"index", level.index},
                      {"pieces", pieces},
                      {"curves", level.b_j},
                      {"complements", comps}});
  }
  json parent = json::object();
  for (const auto& [child, par] : pe.parent) parent[std::to_string(child)] = par;
  return json{{"levels", levels},
              {"parent", parent},
              {"punctures_absorbed", pe.punctures_absorbed},
              {"violations", violations_json(exhaustion::validate_exhaustion(pe))}};
}

}  // namespace

namespace {

json basis_json(const shiftbasis::GoodBasis& basis) {
  json curves = json::array();
  for (const auto& c : basis.curves) {
    json inside = json::array(), outside = json::array();
    for (const auto& e : c.inside) inside.push_back(address_string(e));
    for (const auto& e : c.outside) outside.push_back(address_string(e));
    curves.push_back({{"id", c.id},
                      {"level", {c.level.first, c.level.second}},
                      {"inside", inside},
                      {"outside", outside},
                      {"homology_index", c.homology_index}});
  }
  json ends = json::array();
  for (const auto& e : basis.genus_ends) {
    ends.push_back({{"address", address_string(e)}, {"label", endspace::label_name(e.label)}});
  }
  bool single = true;
  for (const auto& region : shiftbasis::complement_regions(basis)) {
    if (region.size() != 1) single = false;
  }
  return json{{"curves", curves},
              {"genus_ends", ends},
              {"ends_infinite", basis.ends_infinite},
              {"regions_single_end", single}};
}

}  // namespace

}  // namespace

extern "C" {

const char* sc_last_error(void) { return g_last_error.c_str(); }

void sc_string_free(char* s) { delete[] s; }

sc_status sc_surface_parse(const char* text, sc_surface** out) {
  return guarded([&]() -> sc_status {
    if (!text || !out) throw std::invalid_argument("null argument");
    auto spec = surface::spec_from_json(text);
    *out = new sc_surface{std::move(spec)};
    return SC_OK;
  });
}

void sc_surface_free(sc_surface* s) { delete s; }

sc_status sc_surface_validate(const sc_surface* s, char** out) {
  return guarded([&]() -> sc_status {
    if (!s || !out) throw std::invalid_argument("null argument");
    *out = dup_string(violations_json(surface::validate_surface(s->spec)).dump());
    return SC_OK;
  });
}

sc_status sc_classify(const sc_surface* a, const sc_surface* b, int max_seq_depth,
                      char** out) {
  return guarded([&]() -> sc_status {
    endspace::NormalizeOptions opts;
    if (max_seq_depth > 0) opts.max_seq_depth = max_seq_depth;
    auto v = surface::homeomorphic(validated(a), validated(b), opts);
    *out = dup_string(json{{"verdict", endspace::verdict_name(v)}}.dump());
    return SC_OK;
  });
}

sc_status sc_ends_normalize(const char* expr, int max_seq_depth, char** out) {
  return guarded([&]() -> sc_status {
    if (!expr || !out) throw std::invalid_argument("null argument");
    endspace::NormalizeOptions opts;
    if (max_seq_depth > 0) opts.max_seq_depth = max_seq_depth;
    auto e = endspace::parse_expr(expr);
    auto viol = endspace::validate_closedness(e);
    if (!viol.empty()) {
      throw std::invalid_argument("closedness violation at " + viol.front().path + ": " +
                                  viol.front().message);
    }
    auto form = endspace::normalize(e, opts);
    json rows = json::array();
    for (const auto& row : form.profile()) {
      json r{{"rank", row.rank}, {"label", endspace::label_name(row.label)}};
      if (row.omega) r["count"] = "omega";
      else r["count"] = row.count;
      rows.push_back(r);
    }
    json cantor = json::array();
    for (auto l : form.cantor) cantor.push_back(endspace::label_name(l));
    json rep{{"countable", rows},
             {"cantor", cantor},
             {"expr", endspace::to_string(endspace::to_expr(form))}};
    *out = dup_string(rep.dump());
    return SC_OK;
  });
}

sc_status sc_exhaust(const sc_surface* s, int depth, char** out) {
  return guarded([&]() -> sc_status {
    auto pe = exhaustion::build_exhaustion(validated(s), depth);
    *out = dup_string(exhaustion_json(pe).dump());
    return SC_OK;
  });
}

sc_status sc_alexander(const sc_surface* s, int depth, char** out) {
  return guarded([&]() -> sc_status {
    auto pe = exhaustion::build_exhaustion(validated(s), depth);
    auto sys = exhaustion::alexander_system(pe);
    json bstar = json::object();
    for (const auto& [beta, star] : sys.bstar) bstar[std::to_string(beta)] = star;
    json gamma = json::array();
    for (const auto& g : sys.gamma) gamma.push_back(g.size());
    json lf = json::object();
    for (auto beta : sys.b) {
      lf[std::to_string(beta)] = exhaustion::check_local_finiteness(sys, beta);
    }
    json rep{{"B", sys.b},
             {"Bstar", bstar},
             {"gamma_sizes", gamma},
             {"local_finiteness", lf}};
    *out = dup_string(rep.dump());
    return SC_OK;
  });
}

sc_status sc_pants_check(const char* finite_text, long max_count, char** out) {
  return guarded([&]() -> sc_status {
    if (!finite_text || !out) throw std::invalid_argument("null argument");
    auto f = surface::finite_from_json(finite_text);
    auto all = pants::enumerate_pants_decompositions(
        f, max_count > 0 ? static_cast<std::size_t>(max_count) : SIZE_MAX);
    bool all_valid = true, agreement = true;
    for (const auto& pd : all) {
      if (!pants::validate_pants(pd, f).empty()) all_valid = false;
      if (!pants::cut_vertex_check(pd).coincide) agreement = false;
    }
    bool excluded = false;
    bool excluded_known = f.boundary == 0;
    if (excluded_known) excluded = surface::excluded_for_rigidity(f);
    json rep{{"surface", finite_json(f)},
             {"decompositions", all.size()},
             {"all_valid", all_valid},
             {"cut_vertex_agreement", agreement},
             {"alexander_applicable", surface::alexander_applicable(f)},
             {"torsion_abelianization_gate", mcgword::torsion_abelianization_gate(f)}};
    if (excluded_known) rep["excluded_for_rigidity"] = excluded;
    *out = dup_string(rep.dump());
    return SC_OK;
  });
}

sc_status sc_basis(const sc_surface* s, int depth, char** out) {
  return guarded([&]() -> sc_status {
    auto basis = shiftbasis::good_basis(surface::forget_planar(validated(s)), depth);
    *out = dup_string(basis_json(basis).dump());
    return SC_OK;
  });
}

sc_status sc_shift_graph(const sc_surface* s, int depth, const char* which, int as_dot,
                         char** out) {
  return guarded([&]() -> sc_status {
    if (!which || !out) throw std::invalid_argument("null argument");
    std::string sel = which;
    shiftbasis::GraphSel gsel;
    if (sel == "eg") gsel = shiftbasis::GraphSel::EG;
    else if (sel == "teg") gsel = shiftbasis::GraphSel::TEG;
    else if (sel == "nteg") gsel = shiftbasis::GraphSel::NTEG;
    else throw std::invalid_argument("graph selector must be eg, teg or nteg");

    auto s_hat = surface::forget_planar(validated(s));
    auto basis = shiftbasis::good_basis(s_hat, depth);
    auto tree = shiftbasis::teg(basis);
    if (as_dot) {
      *out = dup_string(shiftbasis::graph_dot(tree, gsel));
      return SC_OK;
    }
    json verts = json::array(), edges = json::array();
    for (const auto& v : tree.vertices) {
      if (gsel == shiftbasis::GraphSel::NTEG && v.label != endspace::EndLabel::NonorGenus) {
        continue;
      }
      verts.push_back(
          {{"address", address_string(v)}, {"label", endspace::label_name(v.label)}});
    }
    if (gsel == shiftbasis::GraphSel::EG) {
      auto eg = shiftbasis::ends_graph(s_hat, depth);
      for (const auto& [a, b] : eg.eg_edges()) {
        edges.push_back({{"from", address_string(a)}, {"to", address_string(b)}});
      }
    } else {
      for (const auto& e : tree.edges) {
        if (gsel == shiftbasis::GraphSel::NTEG &&
            e.kind != shiftbasis::ShiftKind::Nonorientable) {
          continue;
        }
        edges.push_back({{"from", address_string(e.minus_end)},
                         {"to", address_string(e.plus_end)},
                         {"kind", shiftbasis::shift_kind_name(e.kind)}});
      }
    }
    json rep{{"graph", sel}, {"vertices", verts}, {"edges", edges}};
    if (gsel == shiftbasis::GraphSel::NTEG) {
      rep["connected"] = shiftbasis::nteg_connected(tree);
    }
    *out = dup_string(rep.dump());
    return SC_OK;
  });
}

sc_status sc_rank(const sc_surface* s, int depth, char** out) {
  return guarded([&]() -> sc_status {
    auto basis = shiftbasis::good_basis(surface::forget_planar(validated(s)), depth);
    *out = dup_string(json{{"rank", rank_json(shiftbasis::rank_r(basis))}}.dump());
    return SC_OK;
  });
}

sc_status sc_word_eval(const char* word_text, int rank, const char* substitute_text,
                       char** out) {
  return guarded([&]() -> sc_status {
    if (!word_text || !out) throw std::invalid_argument("null argument");
    auto w = mcgword::parse_word(word_text);
    auto normal = mcgword::conjugate_rewrite(w);
    auto v = mcgword::phi(w, rank);
    json coords = json::object();
    for (const auto& [i, x] : v.coords) coords[std::to_string(i)] = x;
    json rep{{"word", mcgword::to_string(w)},
             {"normal_form", mcgword::to_string(normal)},
             {"phi", coords},
             {"kernel", mcgword::kernel_coordinate_test(w, rank)}};
    if (substitute_text && *substitute_text) {
      json sj = json::parse(substitute_text);
      mcgword::SupportWindow window;
      for (const auto& c : sj.at("curves")) window.curves.push_back(c.get<std::string>());
      if (sj.contains("separates")) {
        for (const auto& i : sj.at("separates")) {
          window.separated_shifts.insert(i.get<int>());
        }
      }
      int index = sj.at("index").get<int>();
      auto sub = mcgword::substitute_compact(w, index, window);
      rep["substituted"] = mcgword::to_string(sub);
      rep["substituted_phi_index_zero"] = mcgword::psi(sub, index, rank) == 0;
    }
    *out = dup_string(rep.dump());
    return SC_OK;
  });
}

sc_status sc_relation_check(int window, char** out) {
  return guarded([&]() -> sc_status {
    if (!out) throw std::invalid_argument("null argument");
    json rep{{"window", window},
             {"relation_eq1", shiftbasis::strip_relation_check(window)},
             {"broken_variant", shiftbasis::strip_relation_check_broken(window)}};
    *out = dup_string(rep.dump());
    return SC_OK;
  });
}

sc_status sc_cohomology(const sc_surface* s, int depth, char** out) {
  return guarded([&]() -> sc_status {
    auto result = mcgword::cohomology(validated(s), depth);
    json rep;
    if (result.trivial) {
      rep["H1_PMod"] = "trivial";
    } else {
      rep["H1_PMod"] = json{{"free_abelian", rank_json(result.rank)}};
    }
    *out = dup_string(rep.dump());
    return SC_OK;
  });
}

}  // extern "C"
