#pragma once

#include "trimax/atlas.hpp"
#include "trimax/calabi.hpp"
#include "trimax/csv.hpp"
#include "trimax/geom.hpp"
#include "trimax/inscribed.hpp"
#include "trimax/march.hpp"
#include "trimax/numfmt.hpp"
#include "trimax/oracle.hpp"
#include "trimax/polygon.hpp"
#include "trimax/report.hpp"
#include "trimax/svg.hpp"
#include "trimax/wedged.hpp"
