# Copyright 2025 The tautring Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Verifier config
"""

from dataclasses import asdict, dataclass, field, fields, is_dataclass
from typing import Any, Dict, List, Optional, Sequence

from omegaconf import OmegaConf

from ..bundles import DEFAULT_TRUNC, MAX_ROOTS
from ..schur import MAX_PARTITION_SIZE


def recursive_post_init(dataclass_obj):
    if hasattr(dataclass_obj, "post_init"):
        dataclass_obj.post_init()

    for attr in fields(dataclass_obj):
        if is_dataclass(getattr(dataclass_obj, attr.name)):
            recursive_post_init(getattr(dataclass_obj, attr.name))


@dataclass
class EngineConfig:
    trunc: int = DEFAULT_TRUNC
    """truncation order D: Chern classes and characters are kept through degree D"""
    max_roots: int = MAX_ROOTS
    """largest number of formal Chern roots a tensor or Schur power may expand to"""
    max_partition_size: int = MAX_PARTITION_SIZE
    """largest partition size the representation checks may enumerate"""

    def post_init(self):
        if self.trunc < 1:
            raise ValueError(f"engine.trunc must be at least 1, got {self.trunc}.")

        if self.max_roots < 1:
            raise ValueError(f"engine.max_roots must be positive, got {self.max_roots}.")

        if self.max_partition_size < 1:
            raise ValueError(f"engine.max_partition_size must be positive, got {self.max_partition_size}.")


@dataclass
class SuiteConfig:
    only: Optional[List[str]] = None
    """check ids to run, all checks if None"""
    format: str = "text"
    """report format, text or json"""
    num_workers: int = 1
    """parallel workers, only used together with use_ray"""
    use_ray: bool = False
    """run each check as a ray task"""

    def post_init(self):
        if self.format not in ("text", "json"):
            raise ValueError(f"suite.format must be text or json, got {self.format}.")

        if self.num_workers < 1:
            raise ValueError(f"suite.num_workers must be positive, got {self.num_workers}.")

        if self.only is not None:
            self.only = [check_id.strip() for check_id in self.only if check_id.strip()]


@dataclass
class VerifyConfig:
    engine: EngineConfig = field(default_factory=EngineConfig)
    suite: SuiteConfig = field(default_factory=SuiteConfig)

    def deep_post_init(self):
        recursive_post_init(self)

    def to_dict(self):
        return asdict(self)


KEY_ALIASES = {"trunc": "engine.trunc", "only": "suite.only", "format": "suite.format"}
LIST_KEYS = ("suite.only",)


def dotlist_item(key: str, value: str) -> str:
    """Resolve short keys; `a,b` becomes `[a,b]` for list-valued keys."""
    key, value = key.strip(), value.strip()
    key = KEY_ALIASES.get(key, key)
    if key in LIST_KEYS and not value.startswith("["):
        value = f"[{value}]"

    return f"{key}={value}"


def read_config_lines(text: str) -> List[str]:
    """Plain key=value lines, `#` comments; short keys trunc, only and format are accepted."""
    dotlist = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue

        if "=" not in line:
            raise ValueError(f"Config line {number} is not key=value: {line!r}.")

        dotlist.append(dotlist_item(*line.split("=", 1)))

    return dotlist


def load_config(
    config_path: Optional[str] = None,
    overrides: Sequence[str] = (),
    flags: Optional[Dict[str, Any]] = None,
) -> VerifyConfig:
    """Defaults, then the config file, then explicit flags, then dotlist overrides."""
    config = OmegaConf.structured(VerifyConfig())
    if config_path is not None:
        with open(config_path, encoding="utf-8") as f:
            config = OmegaConf.merge(config, OmegaConf.from_dotlist(read_config_lines(f.read())))

    if flags:
        config = OmegaConf.merge(config, OmegaConf.create(flags))

    dotlist = [dotlist_item(*item.split("=", 1)) for item in overrides]
    config = OmegaConf.merge(config, OmegaConf.from_dotlist(dotlist))
    verify_config: VerifyConfig = OmegaConf.to_object(config)
    verify_config.deep_post_init()
    return verify_config
