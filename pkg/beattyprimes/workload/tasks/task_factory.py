from pathlib import Path
from typing import Any, Dict, Optional

from beattyprimes.basic.errors import ConfigError
from beattyprimes.workload.task import Task
from beattyprimes.workload.tasks.count import CountTask
from beattyprimes.workload.tasks.gaps import GapsTask
from beattyprimes.workload.tasks.lemma import DiscrepancyTask, LemmaTask, MollifierTask
from beattyprimes.workload.tasks.predict import PredictTask
from beattyprimes.workload.tasks.singular import SingularTask
from beattyprimes.workload.tasks.type_estimate import TypeTask


class TaskFactory:
    """Factory to create task instances based on task name."""

    TASK_TYPES = {
        'count': CountTask,
        'gaps': GapsTask,
        'predict': PredictTask,
        'singular': SingularTask,
        'lemma': LemmaTask,
        'discrepancy': DiscrepancyTask,
        'mollifier': MollifierTask,
        'type': TypeTask,
    }

    @classmethod
    def create(cls, name: str, type_name: Optional[str], config: Dict[str, Any], global_params: Dict[str, Any],
               workload_dir: Optional[Path] = None) -> Task:
        task_class = cls.TASK_TYPES.get(type_name) if type_name is not None else cls.TASK_TYPES.get(name)
        if not task_class:
            raise ConfigError(f"Unknown task type: {name}, {type_name}")
        return task_class(name, config, global_params, workload_dir)
