/*
   Copyright 2026 The p3d7 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "errors.hpp"
#include "exact/big_float.hpp"
#include "exact/evaluate.hpp"
#include "exact/gaussian_rational.hpp"
#include "exact/laurent_polynomial.hpp"
#include "exact/rational_function.hpp"
#include "exact/roots.hpp"
#include "exact/weighted_rational.hpp"
