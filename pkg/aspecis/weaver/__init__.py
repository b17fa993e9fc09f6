# aspecis, a model weaving toolbox for cooperative requirements.
#
# This file is part of aspecis.
#
# aspecis is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# aspecis is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with aspecis. If not, see <http://www.gnu.org/licenses/>.

from .application import AdviceApplication, LinkSite, collect_applications, order_applications, read_link, read_links
from .conflict import Conflict, Contender, detect_conflicts, resolve_dominant, resolve_conflicts
from .conflict import RESOLVE_MODES, DEFAULT_RESOLVE_MODE, FAIL, PRIORITY
from .binding import WeaveBinding, BINDING_TYPE
from .woven import WovenModel, apply_weave, weave
from .explain import explain_weaving
from ..awm.aspect import ADVICE_KINDS
