#pragma once

#include "tjcm/dynamics.hpp"
#include "tjcm/error.hpp"
#include "tjcm/husimi_wehrl.hpp"
#include "tjcm/model.hpp"
#include "tjcm/observables.hpp"
#include "tjcm/oracle.hpp"
