"""Workload: a ``config.yml`` of experiment tasks sharing one parameter set."""

import time
import traceback
from pathlib import Path
from typing import Any, Dict, List, Optional, Set

import yaml

from beattyprimes.basic.errors import BeattyPrimesError, ConfigError
from beattyprimes.basic.my_logger import logger
from beattyprimes.workload.task import Task
from beattyprimes.workload.tasks.task_factory import TaskFactory


class Workload:
    """Tasks of ``<workload_path>/config.yml``, run in file order.

    ``parameters:`` are shared by every task; runtime parameters (``-p`` on
    the command line) win over them, task-level ``parameters:`` win over both.
    """

    def __init__(self, workload_path, runtime_params: Optional[Dict[str, Any]] = None):
        self.workload_path = Path(workload_path)
        self.config_path = self.workload_path / 'config.yml'
        self.config = self._read_config()
        self.global_params: Dict[str, Any] = {**(self.config.get('parameters') or {}), **(runtime_params or {})}
        self.tasks: List[Task] = []

    def _read_config(self) -> Dict[str, Any]:
        if not self.config_path.is_file():
            raise ConfigError("Config file not found", path=self.config_path)
        try:
            data = yaml.safe_load(self.config_path.read_text(encoding='utf-8')) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"invalid YAML ({e})", path=self.config_path)
        if not isinstance(data, dict):
            raise ConfigError("expected a mapping with 'parameters' and 'tasks'", path=self.config_path)
        return data

    @property
    def stop_on_failure(self) -> bool:
        return bool(self.config.get('stop_on_failure', True))

    def parse(self) -> 'Workload':
        for entry in self.config.get('tasks') or []:
            if not isinstance(entry, dict) or not entry.get('name'):
                raise ConfigError("Each task must have a 'name' field", path=self.config_path)
            self.tasks.append(TaskFactory.create(name=entry['name'], type_name=entry.get('type'), config=entry,
                                                 global_params=self.global_params,
                                                 workload_dir=self.workload_path))
        logger.info(f"Parsed {len(self.tasks)} tasks from {self.config_path}")
        return self

    def _execute(self, task: Task, results: List[Dict[str, Any]]) -> Dict[str, Any]:
        started = time.time()
        try:
            value = task.execute(results)
        except Exception as e:
            elapsed = time.time() - started
            logger.error(f"Task '{task.name}' failed after {elapsed:.2f}s: {e}")
            # domain errors carry their own message; anything else is a bug
            if not isinstance(e, BeattyPrimesError):
                traceback.print_exc()
            return {'task': task.name, 'status': 'failed', 'error': str(e),
                    'exit_code': getattr(e, 'exit_code', 1), 'execution_time': elapsed}
        elapsed = time.time() - started
        logger.info(f"Task '{task.name}' completed successfully in {elapsed:.2f}s")
        return {'task': task.name, 'status': 'success', 'result': value, 'execution_time': elapsed}

    def run(self, skip_tasks: Optional[Set[str]] = None) -> List[Dict[str, Any]]:
        """Status records (``success`` / ``failed`` / ``skipped``) in task order.

        Tasks see the records of the tasks before them.
        """
        skip_tasks = skip_tasks or set()
        results: List[Dict[str, Any]] = []
        total = len(self.tasks)
        for i, task in enumerate(self.tasks, 1):
            if task.name in skip_tasks:
                logger.info(f"[{i}/{total}] Skipping task: {task.name}")
                results.append({'task': task.name, 'status': 'skipped'})
                continue
            logger.info(f"[{i}/{total}] Executing task: {task.name}")
            record = self._execute(task, results)
            results.append(record)
            if record['status'] == 'failed' and self.stop_on_failure:
                break
        return results
