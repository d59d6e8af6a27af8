#ifndef INJDIM_INJDIM_HPP
#define INJDIM_INJDIM_HPP

#include "criteria.hpp"
#include "ext.hpp"
#include "invariants.hpp"
#include "oracle.hpp"
#include "report.hpp"
#include "session.hpp"

#endif  // INJDIM_INJDIM_HPP
