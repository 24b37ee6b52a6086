#ifndef PSEUDOTRAP_PSEUDOTRAP_HPP
#define PSEUDOTRAP_PSEUDOTRAP_HPP

#include "pseudotrap/entourage.hpp"
#include "pseudotrap/errors.hpp"
#include "pseudotrap/oracle.hpp"
#include "pseudotrap/orbit.hpp"
#include "pseudotrap/point_set.hpp"
#include "pseudotrap/pseudo_orbit.hpp"
#include "pseudotrap/report.hpp"
#include "pseudotrap/serialization.hpp"
#include "pseudotrap/system.hpp"
#include "pseudotrap/verifier.hpp"
#include "pseudotrap/zoo.hpp"

#endif // PSEUDOTRAP_PSEUDOTRAP_HPP
