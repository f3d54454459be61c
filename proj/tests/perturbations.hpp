#pragma once

#include <map>
#include <set>
#include <string>

namespace tdq::testing {

// Doubling one generator breaks exactly the relations that contain it and
// have a nonzero right-hand side not scaled along with it. Serre cubics,
// centrality of k0 k1 and the vanishing brackets are homogeneous and survive.
inline const std::map<std::string, std::set<std::string>> kAlternatePerturbations = {
    {"y0p", {"qcomm(y0+,k0)=1", "qcomm(y0-,y0+)=1", "qcomm(y0+,y1-)=k0^-1k1^-1"}},
    {"y1p", {"qcomm(y1+,k1)=1", "qcomm(y1-,y1+)=1", "qcomm(y1+,y0-)=k0^-1k1^-1"}},
    {"y0m", {"qcomm(k0,y0-)=1", "qcomm(y0-,y0+)=1", "qcomm(y1+,y0-)=k0^-1k1^-1"}},
    {"y1m", {"qcomm(k1,y1-)=1", "qcomm(y1-,y1+)=1", "qcomm(y0+,y1-)=k0^-1k1^-1"}},
    {"k0", {"inverse(k0)", "qcomm(y0+,k0)=1", "qcomm(k0,y0-)=1"}},
    {"k1", {"inverse(k1)", "qcomm(y1+,k1)=1", "qcomm(k1,y1-)=1"}},
    {"k0inv", {"inverse(k0)", "qcomm(y0+,y1-)=k0^-1k1^-1", "qcomm(y1+,y0-)=k0^-1k1^-1"}},
    {"k1inv", {"inverse(k1)", "qcomm(y0+,y1-)=k0^-1k1^-1", "qcomm(y1+,y0-)=k0^-1k1^-1"}},
};

// Conjugation by K_i is linear in e, so only a scaled K_i (or its inverse)
// breaks it; the diagonal bracket has the nonzero side K_i - K_i^-1.
inline const std::map<std::string, std::set<std::string>> kChevalleyPerturbations = {
    {"e0p", {"bracket(e0+,e0-)"}},
    {"e1p", {"bracket(e1+,e1-)"}},
    {"e0m", {"bracket(e0+,e0-)"}},
    {"e1m", {"bracket(e1+,e1-)"}},
    {"K0",
     {"inverse(K0)", "conj(K0,e0+)", "conj(K0,e0-)", "conj(K0,e1+)", "conj(K0,e1-)", "bracket(e0+,e0-)"}},
    {"K1",
     {"inverse(K1)", "conj(K1,e0+)", "conj(K1,e0-)", "conj(K1,e1+)", "conj(K1,e1-)", "bracket(e1+,e1-)"}},
    {"K0inv",
     {"inverse(K0)", "conj(K0,e0+)", "conj(K0,e0-)", "conj(K0,e1+)", "conj(K0,e1-)", "bracket(e0+,e0-)"}},
    {"K1inv",
     {"inverse(K1)", "conj(K1,e0+)", "conj(K1,e0-)", "conj(K1,e1+)", "conj(K1,e1-)", "bracket(e1+,e1-)"}},
};

}  // namespace tdq::testing
