#pragma once

#include "tensorwalk/holonomic.hpp"
#include "tensorwalk/laurent.hpp"
#include "tensorwalk/powerseries.hpp"
#include "tensorwalk/walks.hpp"

#include <string>

namespace tensorwalk::io {

// JSON wire formats (all big integers as decimal strings):
//   Sequence     ["1","0","1",...]
//   PowerSeries  ["1","-5/3",...]
//   CTSpec       {"vars":d, "delta":[[e1,..,ed,"coeff"],...], "kernel":[...]}
//   WalkConfig   {"domain":[{"coeffs":[a,b],"bound":c,"relation":">="|"="}],
//                 "steps":[{"vector":[dx,dy],"multiplicity":m,
//                           "forbidden_when":[constraints]}],
//                 "start":[x,y]}
//   PRecurrence  {"coeffs":[["p0_0","p0_1",...],...]}           (ascending degree)
//   DiffOp       {"coeffs":[{"num":[...],"den":[...]},...]}

std::string sequence_to_json(const Sequence& a, int indent = -1);
Sequence sequence_from_json(const std::string& text);

std::string series_to_json(const series::PowerSeries& s, int indent = -1);
series::PowerSeries series_from_json(const std::string& text);

std::string ct_spec_to_json(const laurent::CTSpec& spec, int indent = -1);
laurent::CTSpec ct_spec_from_json(const std::string& text);

std::string walk_config_to_json(const walks::WalkConfig& cfg, int indent = -1);
walks::WalkConfig walk_config_from_json(const std::string& text);

std::string recurrence_to_json(const holonomic::PRecurrence& rec, int indent = -1);
holonomic::PRecurrence recurrence_from_json(const std::string& text);

std::string diffop_to_json(const holonomic::DiffOp& op, int indent = -1);
holonomic::DiffOp diffop_from_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace tensorwalk::io
